#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/gaussian.hpp"

namespace hurwitz {

/// A set S of Gaussian integers with norm-ordered enumeration.
///
/// Three shapes are supported: an explicit finite list, the cofinite sets
/// {norm >= m} (D2 is m = 8, the nonzero lattice m = 1, the full lattice m = 0),
/// and an arbitrary membership predicate, which is treated as infinite.
class DigitSet {
public:
    static DigitSet finite(std::vector<LatticePoint> members, std::string name = "finite");
    static DigitSet norm_at_least(std::int64_t min_norm_sq, std::string name = {});
    static DigitSet d2() { return norm_at_least(8, "D2"); }
    static DigitSet annulus(std::int64_t lo_norm_sq, std::int64_t hi_norm_sq);
    static DigitSet predicate(std::function<bool(const LatticePoint&)> pred, std::string name);

    /// "D2", "lattice", "nonzero", "norm>=M", "annulus:LO:HI", "list:k,l;k,l;...".
    static DigitSet parse(const std::string& spec);

    bool contains(const LatticePoint& p) const;
    bool is_finite() const { return kind_ == Kind::finite; }
    const std::string& name() const { return name_; }

    /// Smallest m with every lattice point of norm >= m in S, when S is cofinite.
    std::optional<std::int64_t> cofinite_from() const;

    /// tau(|S|) when known in closed form: 2 for cofinite sets, 0 for finite sets.
    std::optional<double> known_tau() const;

    /// Members with lo <= norm_sq <= hi, in norm order.
    std::vector<LatticePoint> members_in_norm_range(std::int64_t lo, std::int64_t hi) const;

    /// First `count` members in norm order (fewer if S is finite and smaller).
    std::vector<LatticePoint> first(std::size_t count) const;

    /// All members of a finite set, in norm order.
    const std::vector<LatticePoint>& finite_members() const;

    std::int64_t min_norm_sq() const;

    /// Lazy norm-ordered traversal. Members are produced shell by shell.
    class Cursor {
    public:
        explicit Cursor(const DigitSet& set);
        /// Next member, or nullopt when a finite set is exhausted.
        std::optional<LatticePoint> next();
        /// Norm of the next member without consuming it.
        std::optional<std::int64_t> peek_norm();

    private:
        void refill();
        const DigitSet* set_;
        std::vector<LatticePoint> buffer_;
        std::size_t pos_ = 0;
        std::int64_t scanned_to_ = -1;
        std::int64_t chunk_ = 64;
        bool exhausted_ = false;
    };

    Cursor cursor() const { return Cursor(*this); }

private:
    enum class Kind { finite, cofinite, predicate };
    Kind kind_ = Kind::finite;
    std::string name_;
    std::vector<LatticePoint> members_;  // finite
    std::int64_t min_norm_ = 0;          // cofinite
    std::shared_ptr<const std::function<bool(const LatticePoint&)>> pred_;
};

}  // namespace hurwitz
