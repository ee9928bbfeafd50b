#include "hyperzagreb/formulas.hpp"

#include <stdexcept>
#include <utility>

namespace hyperzagreb {

namespace {

void check(bool ok, const std::string& message, bool unchecked) {
    if (!ok && !unchecked) fail(errc::parameter_out_of_range, message);
}

void same_value(const Exact& expanded, const Exact& census) {
    if (!(expanded == census))
        throw std::logic_error("formula forms disagree: " + expanded.str() +
                               " vs " + census.str());
}

Exact sq(const Exact& x) { return x * x; }

const Exact half(1, 2);
const Exact quarter(1, 4);

}  // namespace

Exact::Exact(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    reduce();
}

void Exact::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigInt Exact::to_integer() const {
    if (!is_integer()) fail(errc::not_integer, "value " + str() + " is not an integer");
    return num_;
}

std::string Exact::str() const {
    if (is_integer()) return num_.str();
    return num_.str() + "/" + den_.str();
}

Exact Exact::operator-() const { return Exact(-num_, den_); }

Exact operator+(const Exact& a, const Exact& b) {
    return Exact(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Exact operator-(const Exact& a, const Exact& b) {
    return Exact(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Exact operator*(const Exact& a, const Exact& b) {
    return Exact(a.num_ * b.num_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const Exact& a, const Exact& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Exact min_zagreb_formula(long long n, long long m, long long k) {
    Exact expanded = Exact(3) * k * m - Exact(2) * n;
    // Degree census with only degrees 1 and 2: n2 = km - n, n1 = 2n - km.
    Exact n2 = Exact(k) * m - n;
    Exact n1 = Exact(2) * n - Exact(k) * m;
    same_value(expanded, n1 + Exact(4) * n2);
    return expanded;
}

Exact b_max_formula(long long k, long long m, long long g, bool unchecked) {
    check(g >= 3 && m >= 2 * g, "needs g >= 3 and m >= 2g", unchecked);
    Exact expanded = Exact(-10) * g + Exact(m) * k + Exact(7) * m + 8 + Exact(m) * m +
                     Exact(4) * g * g - Exact(4) * m * g;
    // Census: 2g(k-2) cored on the cycles, (m-2g)(k-1) pendant cored,
    // 2(g-1) joints of degree 2, one apex of degree m - 2g + 4.
    Exact census = Exact(2) * g * (k - 2) + Exact(m - 2 * g) * (k - 1) +
                   Exact(8) * (g - 1) + sq(Exact(m - 2 * g + 4));
    same_value(expanded, census);
    return expanded;
}

Exact c1_even_formula(long long k, long long m, long long g, bool unchecked) {
    check(g >= 4 && g % 2 == 0 && 2 * m >= 3 * g, "needs even g >= 4 and m >= 3g/2", unchecked);
    Exact expanded = Exact(-9, 2) * g + Exact(m) * k + Exact(5) * m + 6 + Exact(m) * m +
                     Exact(9, 4) * g * g - Exact(3) * m * g;
    // Census: three paths of g/2 edges between two junctions, one junction
    // carrying the m - 3g/2 pendant edges.
    Exact s = Exact(3, 2) * g;
    Exact w = Exact(m) - s;
    Exact census = s * (k - 2) + w * (k - 1) + Exact(12) * (half * g - 1) + 9 + sq(Exact(3) + w);
    same_value(expanded, census);
    return expanded;
}

Exact c2_odd_formula(long long k, long long m, long long g, bool unchecked) {
    check(g >= 3 && g % 2 == 1 && 2 * m >= 3 * g - 1, "needs odd g >= 3 and m >= (3g-1)/2",
          unchecked);
    Exact expanded = Exact(-6) * g + Exact(23, 4) + Exact(m) * k + Exact(6) * m +
                     Exact(m) * m + Exact(9, 4) * g * g - Exact(3) * m * g;
    // Census: s = g + (g-1)/2 base edges; one cored position of the closing
    // edge is consumed by the third path, hence the lone (k-3) term.
    Exact s = Exact(g) + half * (g - 1);
    Exact w = Exact(m) - s;
    Exact census = (s - 1) * (k - 2) + Exact(k - 3) + w * (k - 1) + Exact(4) * (s - 1) +
                   sq(Exact(3) + w);
    same_value(expanded, census);
    return expanded;
}

Exact c1_odd_formula(long long k, long long m, long long g, bool unchecked) {
    check(g >= 3 && g % 2 == 1 && 2 * m >= 3 * g + 1, "needs odd g >= 3 and m >= g + (g+1)/2",
          unchecked);
    Exact expanded = Exact(-3) * g + Exact(19, 4) + Exact(m) * k + Exact(4) * m +
                     Exact(m) * m + Exact(9, 4) * g * g - Exact(3) * m * g;
    // Census: paths of (g-1)/2, (g+1)/2, (g+1)/2 edges between two junctions.
    Exact s = Exact(g) + half * (g + 1);
    Exact w = Exact(m) - s;
    Exact census = s * (k - 2) + w * (k - 1) + Exact(4) * (s - 3) + 9 + sq(Exact(3) + w);
    same_value(expanded, census);
    return expanded;
}

Exact c3_pendant_formula(long long k, long long m, long long p, long long q, long long l,
                         bool unchecked) {
    bool legal = q >= 2 && p >= 1 && l >= 1 && m >= p + q + l &&
                 ((q == 2 && p <= l) || (q > 2 && p <= q - 2 && q - 2 <= l));
    check(legal, "needs legal C3 parameters with q >= 2 and m >= p+q+l", unchecked);
    Exact expanded = Exact(-p) - q + 2 - l + Exact(m) * k + Exact(3) * m + Exact(m) * m +
                     Exact(p) * p + Exact(q) * q + Exact(l) * l - Exact(2) * m * p -
                     Exact(2) * m * q - Exact(2) * m * l + Exact(2) * p * q +
                     Exact(2) * p * l + Exact(2) * q * l;
    // Census: the base has s + 1 degree-2 vertices and s(k-2) - 2 cored ones;
    // pendants sit on one of the degree-2 vertices.
    long long s = p + q + l;
    Exact w = Exact(m - s);
    Exact census = Exact(s) * (k - 2) - 2 + w * (k - 1) + Exact(4) * s + sq(Exact(2) + w);
    same_value(expanded, census);
    return expanded;
}

Exact move_delta_formula(long long t, long long du, long long dv) {
    if (t < 1) fail(errc::parameter_out_of_range, "move delta needs t >= 1");
    if (du < t) fail(errc::parameter_out_of_range, "moved count exceeds the source degree");
    if (dv < 0) fail(errc::parameter_out_of_range, "negative target degree");
    // (du - t)^2 + (dv + t)^2 - du^2 - dv^2 expands to 2t(t + dv - du).
    Exact direct = sq(Exact(du - t)) + sq(Exact(dv + t)) - sq(Exact(du)) - sq(Exact(dv));
    Exact expanded = Exact(2) * t * (Exact(t) + dv - du);
    same_value(expanded, direct);
    return expanded;
}

Exact theorem_even_margin(long long k, long long m, long long g, bool unchecked) {
    check(g >= 4 && g % 2 == 0 && m >= 2 * g, "needs even g >= 4 and m >= 2g", unchecked);
    Exact expanded = Exact(11, 2) * g - Exact(2) * m - 2 - Exact(7, 4) * g * g + Exact(m) * g;
    same_value(expanded, c1_even_formula(k, m, g, true) - b_max_formula(k, m, g, true));
    return expanded;
}

Exact theorem_odd_margin(long long k, long long m, long long g, bool unchecked) {
    check(g >= 3 && g % 2 == 1 && m >= 2 * g, "needs odd g >= 3 and m >= 2g", unchecked);
    Exact expanded = Exact(4) * g - Exact(m) - Exact(9, 4) - Exact(7, 4) * g * g + Exact(m) * g;
    same_value(expanded, c2_odd_formula(k, m, g, true) - b_max_formula(k, m, g, true));
    return expanded;
}

GirthMargins theorem_margins(long long k, long long m, long long g, bool unchecked) {
    GirthMargins margins;
    if (g % 2 == 0)
        margins.even_margin = theorem_even_margin(k, m, g, unchecked);
    else
        margins.odd_margin = theorem_odd_margin(k, m, g, unchecked);
    return margins;
}

bool degree_identity_check(const Hypergraph& h) {
    std::optional<int> k = h.uniformity();
    if (!k) fail(errc::not_uniform, "degree identity requires a uniform hypergraph");
    Exact total = min_zagreb_formula(h.vertex_count(), h.edge_count(), *k);
    for (const auto& [degree, count] : h.degree_stats().histogram)
        total = total + Exact(static_cast<long long>(degree) - 1) *
                            (static_cast<long long>(degree) - 2) * count;
    return total == Exact(h.zagreb_index());
}

}  // namespace hyperzagreb
