#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperzagreb/hypergraph.hpp"

namespace hyperzagreb {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational kept in lowest terms with a positive denominator. The
/// closed forms below only ever need denominators 1, 2 and 4, but callers
/// may combine values freely.
class Exact {
public:
    Exact() : num_(0), den_(1) {}
    Exact(long long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    Exact(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
    Exact(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    /// Integral value; raises NotInteger otherwise.
    BigInt to_integer() const;

    /// "a" for integers, "a/b" otherwise.
    std::string str() const;

    Exact operator-() const;
    friend Exact operator+(const Exact& a, const Exact& b);
    friend Exact operator-(const Exact& a, const Exact& b);
    friend Exact operator*(const Exact& a, const Exact& b);
    friend bool operator==(const Exact& a, const Exact& b) = default;
    friend std::strong_ordering operator<=>(const Exact& a, const Exact& b);

private:
    void reduce();
    BigInt num_, den_;
};

/// Every closed form is evaluated twice, once from the expanded polynomial
/// and once from the degree-census it was derived from; a disagreement is a
/// programming error and raises std::logic_error. Range checks reflect the
/// domain on which the value is meaningful; pass unchecked=true to evaluate
/// the polynomial outside that domain.

/// Minimum Zagreb index of a connected bicyclic instance: 3km - 2n.
Exact min_zagreb_formula(long long n, long long m, long long k);

/// Maximum Zagreb index over bicyclic hypergraphs carrying two girth-g
/// hypercycles. Domain: g >= 3, m >= 2g.
Exact b_max_formula(long long k, long long m, long long g, bool unchecked = false);

/// Maximum for girth-g theta-style hypergraphs, even g. Domain: even g >= 4,
/// m >= 3g/2.
Exact c1_even_formula(long long k, long long m, long long g, bool unchecked = false);

/// Maximum for girth-g theta-style hypergraphs, odd g. Domain: odd g >= 3,
/// m >= (3g-1)/2.
Exact c2_odd_formula(long long k, long long m, long long g, bool unchecked = false);

/// The odd-girth competitor built from three cycles of the C1 shape. Domain:
/// odd g >= 3, m >= g + (g+1)/2.
Exact c1_odd_formula(long long k, long long m, long long g, bool unchecked = false);

/// Zagreb index of the C3 base (p, q, l) with m - p - q - l pendant edges at
/// a degree-2 vertex. Domain: q >= 2, legal C3 parameters, m >= p + q + l.
Exact c3_pendant_formula(long long k, long long m, long long p, long long q, long long l,
                         bool unchecked = false);

/// Zagreb delta of moving t edges from a vertex of degree du onto one of
/// degree dv (degrees taken before the move): 2t(t + dv - du). Positive
/// whenever dv > du - t.
Exact move_delta_formula(long long t, long long du, long long dv);

/// Margin of the even-girth theta maximum over the two-cycle maximum:
/// c1_even - b_max = (11/2)g - 2m - 2 - (7/4)g^2 + mg. Domain: even g >= 4,
/// m >= 2g.
Exact theorem_even_margin(long long k, long long m, long long g, bool unchecked = false);

/// Margin of the odd-girth theta maximum over the two-cycle maximum:
/// c2_odd - b_max = 4g - m - 9/4 - (7/4)g^2 + mg. Domain: odd g >= 3, m >= 2g.
Exact theorem_odd_margin(long long k, long long m, long long g, bool unchecked = false);

struct GirthMargins {
    std::optional<Exact> even_margin;  ///< set when g is even
    std::optional<Exact> odd_margin;   ///< set when g is odd
};

/// Both margins at (k, m, g); the component matching the parity of g is set.
GirthMargins theorem_margins(long long k, long long m, long long g, bool unchecked = false);

/// Checks the degree-census identity
///   zagreb = sum_t (t-1)(t-2) n_t + 3km - 2n
/// for a k-uniform hypergraph. Raises NotUniform when no k exists.
bool degree_identity_check(const Hypergraph& h);

}  // namespace hyperzagreb
