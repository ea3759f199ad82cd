#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hdr/alg/rational.hpp"

namespace hdr::chern {

using alg::Rational;
using Exponents = std::vector<int>;

// Free graded-commutative polynomial ring over Q on named generators of
// positive degree, truncated above `truncation`.
struct GradedRing {
    std::vector<std::string> names;
    std::vector<int> degrees;
    int truncation = 1;

    int degree_of(const Exponents& e) const;
    std::vector<Exponents> monomials_of_degree(int d) const;
    int index_of(const std::string& name) const;  // -1 if absent
};

using RingPtr = std::shared_ptr<const GradedRing>;
RingPtr make_ring(std::vector<std::string> names, std::vector<int> degrees, int truncation);

class GradedClass {
public:
    GradedClass() = default;
    explicit GradedClass(RingPtr ring) : ring_(std::move(ring)) {}
    static GradedClass constant(RingPtr ring, const Rational& c);
    static GradedClass generator(RingPtr ring, const std::string& name);
    static GradedClass monomial(RingPtr ring, const Exponents& e, const Rational& c);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::map<Exponents, Rational>& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }
    Rational constant_term() const;
    GradedClass component(int d) const;
    // every term has degree d (the zero class is homogeneous of every degree)
    bool is_homogeneous(int d) const;
    bool has_integer_coefficients() const;

    GradedClass operator-() const;
    friend GradedClass operator+(const GradedClass& a, const GradedClass& b);
    friend GradedClass operator-(const GradedClass& a, const GradedClass& b) { return a + (-b); }
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
    friend GradedClass operator*(const Rational& s, const GradedClass& a);
    friend bool operator==(const GradedClass& a, const GradedClass& b) { return a.t_ == b.t_; }
    friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }
    GradedClass pow(int k) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::map<Exponents, Rational> t_;
    void add_term(const Exponents& e, const Rational& c);
};

// exp(x) and log(1 + x) for x without constant term (nilpotent in the
// truncated ring).
GradedClass exp_series(const GradedClass& x);
GradedClass log1p_series(const GradedClass& x);

// Parses "3*h^2 - k/2" style strings; division only by integers.
GradedClass parse_class(const RingPtr& ring, const std::string& text);

}  // namespace hdr::chern
