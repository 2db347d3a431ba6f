#include "hurwitz/digit_set.hpp"

#include <algorithm>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

DigitSet DigitSet::finite(std::vector<LatticePoint> members, std::string name) {
    DigitSet s;
    s.kind_ = Kind::finite;
    s.name_ = std::move(name);
    std::sort(members.begin(), members.end(), norm_order);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    s.members_ = std::move(members);
    return s;
}

DigitSet DigitSet::norm_at_least(std::int64_t min_norm_sq, std::string name) {
    DigitSet s;
    s.kind_ = Kind::cofinite;
    s.min_norm_ = std::max<std::int64_t>(min_norm_sq, 0);
    s.name_ = name.empty() ? "norm>=" + std::to_string(s.min_norm_) : std::move(name);
    return s;
}

DigitSet DigitSet::annulus(std::int64_t lo_norm_sq, std::int64_t hi_norm_sq) {
    return finite(lattice_points_in_norm_range(lo_norm_sq, hi_norm_sq),
                  "annulus:" + std::to_string(lo_norm_sq) + ":" + std::to_string(hi_norm_sq));
}

DigitSet DigitSet::predicate(std::function<bool(const LatticePoint&)> pred, std::string name) {
    DigitSet s;
    s.kind_ = Kind::predicate;
    s.name_ = std::move(name);
    s.pred_ = std::make_shared<const std::function<bool(const LatticePoint&)>>(std::move(pred));
    return s;
}

DigitSet DigitSet::parse(const std::string& spec) {
    if (spec == "D2" || spec == "d2") return d2();
    if (spec == "lattice") return norm_at_least(0, "lattice");
    if (spec == "nonzero") return norm_at_least(1, "nonzero");
    if (spec.rfind("norm>=", 0) == 0) {
        try {
            return norm_at_least(std::stoll(spec.substr(6)));
        } catch (const std::exception&) {
            throw ParseError("bad digit set '" + spec + "'");
        }
    }
    if (spec.rfind("annulus:", 0) == 0) {
        const auto rest = spec.substr(8);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw ParseError("annulus needs LO:HI in '" + spec + "'");
        try {
            return annulus(std::stoll(rest.substr(0, colon)), std::stoll(rest.substr(colon + 1)));
        } catch (const std::exception&) {
            throw ParseError("bad digit set '" + spec + "'");
        }
    }
    if (spec.rfind("list:", 0) == 0) {
        std::vector<LatticePoint> pts;
        std::stringstream ss(spec.substr(5));
        std::string item;
        while (std::getline(ss, item, ';')) {
            const auto comma = item.find(',');
            if (comma == std::string::npos) throw ParseError("list entry needs k,l in '" + spec + "'");
            try {
                pts.push_back({std::stoll(item.substr(0, comma)), std::stoll(item.substr(comma + 1))});
            } catch (const std::exception&) {
                throw ParseError("bad list entry '" + item + "'");
            }
        }
        if (pts.empty()) throw ParseError("empty digit list");
        return finite(std::move(pts), spec);
    }
    throw ParseError("unknown digit set '" + spec + "'");
}

bool DigitSet::contains(const LatticePoint& p) const {
    switch (kind_) {
        case Kind::finite: return std::binary_search(members_.begin(), members_.end(), p, norm_order);
        case Kind::cofinite: return p.norm_sq() >= min_norm_;
        case Kind::predicate: return (*pred_)(p);
    }
    return false;
}

std::optional<std::int64_t> DigitSet::cofinite_from() const {
    if (kind_ == Kind::cofinite) return min_norm_;
    return std::nullopt;
}

std::optional<double> DigitSet::known_tau() const {
    if (kind_ == Kind::cofinite) return 2.0;
    if (kind_ == Kind::finite) return 0.0;
    return std::nullopt;
}

std::vector<LatticePoint> DigitSet::members_in_norm_range(std::int64_t lo, std::int64_t hi) const {
    if (kind_ == Kind::finite) {
        std::vector<LatticePoint> out;
        for (const auto& p : members_) {
            const auto n = p.norm_sq();
            if (n >= lo && n <= hi) out.push_back(p);
        }
        return out;
    }
    if (kind_ == Kind::cofinite) return lattice_points_in_norm_range(std::max(lo, min_norm_), hi);
    auto pts = lattice_points_in_norm_range(lo, hi);
    std::erase_if(pts, [this](const LatticePoint& p) { return !(*pred_)(p); });
    return pts;
}

std::vector<LatticePoint> DigitSet::first(std::size_t count) const {
    std::vector<LatticePoint> out;
    out.reserve(count);
    auto cur = cursor();
    while (out.size() < count) {
        auto p = cur.next();
        if (!p) break;
        out.push_back(*p);
    }
    return out;
}

const std::vector<LatticePoint>& DigitSet::finite_members() const {
    if (kind_ != Kind::finite) throw PreconditionError("digit set '" + name_ + "' is not finite");
    return members_;
}

std::int64_t DigitSet::min_norm_sq() const {
    if (kind_ == Kind::finite) {
        if (members_.empty()) throw PreconditionError("empty digit set");
        return members_.front().norm_sq();
    }
    auto cur = cursor();
    auto n = cur.peek_norm();
    if (!n) throw PreconditionError("empty digit set");
    return *n;
}

DigitSet::Cursor::Cursor(const DigitSet& set) : set_(&set) {}

void DigitSet::Cursor::refill() {
    buffer_.clear();
    pos_ = 0;
    if (set_->kind_ == Kind::finite) {
        if (scanned_to_ < 0) {
            buffer_ = set_->members_;
            scanned_to_ = 0;
        } else {
            exhausted_ = true;
        }
        return;
    }
    // predicate sets may be sparse; widen the scanned shell range until something appears
    int empty_rounds = 0;
    while (buffer_.empty()) {
        const std::int64_t lo = scanned_to_ + 1;
        const std::int64_t hi = lo + chunk_;
        buffer_ = set_->members_in_norm_range(lo, hi);
        scanned_to_ = hi;
        chunk_ = std::min<std::int64_t>(chunk_ * 2, std::int64_t{1} << 22);
        if (++empty_rounds > 64) throw PreconditionError("digit set '" + set_->name_ + "' looks empty");
    }
}

std::optional<LatticePoint> DigitSet::Cursor::next() {
    if (pos_ >= buffer_.size()) {
        if (exhausted_) return std::nullopt;
        refill();
        if (exhausted_ || buffer_.empty()) return std::nullopt;
    }
    return buffer_[pos_++];
}

std::optional<std::int64_t> DigitSet::Cursor::peek_norm() {
    if (pos_ >= buffer_.size()) {
        if (exhausted_) return std::nullopt;
        refill();
        if (exhausted_ || buffer_.empty()) return std::nullopt;
    }
    return buffer_[pos_].norm_sq();
}

}  // namespace hurwitz
