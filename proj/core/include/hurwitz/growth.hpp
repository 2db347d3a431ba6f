#pragma once

// Growth functions f(n) given as small expressions over n:
// numbers, n, + - * / ^, parentheses, max(..), min(..), log(x), sqrt(x).

#include <memory>
#include <string>

namespace hurwitz {

class GrowthFunction {
public:
    /// Throws ParseError on malformed input.
    static GrowthFunction parse(const std::string& expr);
    static GrowthFunction constant(double c);

    double operator()(double n) const;
    const std::string& expression() const { return text_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

}  // namespace hurwitz
