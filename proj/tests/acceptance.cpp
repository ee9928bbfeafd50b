// Acceptance battery: every release claim of the library, each checked
// exhaustively and reported as a single pass/fail line.  Every comparison
// below is exact integer equality; there are no tolerances to tune.
// A nonzero exit status means at least one criterion failed.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hyperzagreb/canonical.hpp"
#include "hyperzagreb/construct.hpp"
#include "hyperzagreb/enumerate.hpp"
#include "hyperzagreb/formulas.hpp"
#include "hyperzagreb/transform.hpp"
#include "hyperzagreb/verify.hpp"
#include "support/oracles.hpp"

using namespace hyperzagreb;

namespace {

// Accumulates failure descriptions; empty means the criterion holds.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++comparisons_;
        if (!ok) {
            ++failures_;
            if (failures_ <= 4) log_ << "\n    failed: " << what;
        }
    }

    bool ok() const { return failures_ == 0; }
    int comparisons() const { return comparisons_; }
    std::string detail() const {
        std::string text = log_.str();
        if (failures_ > 4)
            text += "\n    (" + std::to_string(failures_ - 4) + " more failures suppressed)";
        return text;
    }

private:
    std::ostringstream log_;
    int comparisons_ = 0;
    int failures_ = 0;
};

EnumerationOptions parallel_options(std::optional<int> max_m = std::nullopt) {
    EnumerationOptions options;
    options.max_m_override = max_m;
    options.workers = static_cast<int>(
        std::min(4u, std::max(1u, std::thread::hardware_concurrency())));
    return options;
}

bool isomorphic_fitted(const Hypergraph& a, const Hypergraph& b) {
    CanonicalOptions opts;
    opts.max_vertices = std::max(a.vertex_count(), b.vertex_count());
    return are_isomorphic(a, b, opts);
}

void criterion_minimum(Check& c) {
    const long long expected[] = {22, 27, 32};
    for (int m = 4; m <= 6; ++m) {
        VerifyReport r = verify_min(3, m, parallel_options());
        c.expect(r.verdict == Verdict::pass, "minimum check did not pass at m=" + std::to_string(m));
        c.expect(r.expected == std::to_string(expected[m - 4]),
                 "minimum value at m=" + std::to_string(m) + " is " + r.expected);
        c.expect(r.witness_matches == true, "minimizer witness missed at m=" + std::to_string(m));
    }
}

void criterion_global(Check& c) {
    VerifyReport r = verify_global(3, 6, parallel_options());
    c.expect(r.verdict == Verdict::pass, "global maximum check did not pass");
    c.expect(r.expected == "44" && r.observed == "44",
             "global maximum at k=3 m=6 read " + r.observed);
    Hypergraph shape = build_family({Family::C, 2, 1, 2, 1, 2}, 3);
    c.expect(r.witness.has_value() && isomorphic_fitted(*r.witness, shape),
             "global maximizer is not the expected theta with two pendant edges");
}

void criterion_theta_even(Check& c) {
    VerifyReport r = verify_c_family(3, 6, 4, parallel_options());
    c.expect(r.verdict == Verdict::pass, "even-girth theta check did not pass");
    c.expect(r.expected == "36" && r.observed == "36",
             "even-girth theta maximum at k=3 m=6 g=4 read " + r.observed);
    Hypergraph shape = build_family({Family::C, 1, 2, 2, 2, 0}, 3);
    c.expect(r.witness.has_value() && isomorphic_fitted(*r.witness, shape),
             "even-girth maximizer is not the balanced theta");
}

void criterion_two_cycle(Check& c) {
    VerifyReport six = verify_b_family(3, 6, 3, parallel_options());
    c.expect(six.verdict == Verdict::pass, "two-cycle check did not pass at m=6");
    c.expect(six.expected == "38" && six.observed == "38",
             "two-cycle maximum at k=3 m=6 g=3 read " + six.observed);

    VerifyReport seven = verify_b_family(3, 7, 3, parallel_options(7));
    c.expect(seven.verdict == Verdict::pass, "two-cycle check did not pass at m=7");
    c.expect(seven.expected == "49" && seven.observed == "49",
             "two-cycle maximum at k=3 m=7 g=3 read " + seven.observed);
    c.expect(seven.witness.has_value() &&
                 isomorphic_fitted(*seven.witness, extremal_b(3, 7, 3)),
             "two-cycle maximizer at m=7 is not the constructed witness");
}

void criterion_formula_grid(Check& c) {
    for (int k = 3; k <= 5; ++k) {
        for (int m = 4; m <= 12; ++m) {
            Hypergraph least = min_bicyclic(k, m);
            c.expect(least.zagreb_index() ==
                         min_zagreb_formula(static_cast<long long>(m) * (k - 1) - 1, m, k)
                             .to_integer(),
                     "minimum closed form vs construction at k=" + std::to_string(k) +
                         " m=" + std::to_string(m));
            c.expect(degree_identity_check(least), "degree census identity (minimum witness)");

            GlobalMaxResult top = global_max(k, m);
            c.expect(degree_identity_check(top.graph), "degree census identity (global witness)");
            if (m >= 6)
                c.expect(top.graph.zagreb_index() == c2_odd_formula(k, m, 3).to_integer(),
                         "global closed form vs construction at k=" + std::to_string(k) +
                             " m=" + std::to_string(m));
            else
                c.expect(top.outside_theorem_range, "small edge counts must be flagged");

            for (int g = 3; 2 * g <= m; ++g) {
                Hypergraph b = extremal_b(k, m, g);
                c.expect(b.zagreb_index() == b_max_formula(k, m, g).to_integer(),
                         "two-cycle closed form vs construction at k=" + std::to_string(k) +
                             " m=" + std::to_string(m) + " g=" + std::to_string(g));
                c.expect(degree_identity_check(b), "degree census identity (two-cycle witness)");
            }
            for (int g = 4; 3 * g <= 2 * m; g += 2) {
                Hypergraph t = extremal_c(k, m, g);
                c.expect(t.zagreb_index() == c1_even_formula(k, m, g).to_integer(),
                         "even theta closed form vs construction at k=" + std::to_string(k) +
                             " m=" + std::to_string(m) + " g=" + std::to_string(g));
                c.expect(degree_identity_check(t), "degree census identity (even theta witness)");
            }
            for (int g = 3; 3 * g - 1 <= 2 * m; g += 2) {
                Hypergraph t = extremal_c(k, m, g);
                c.expect(t.zagreb_index() == c2_odd_formula(k, m, g).to_integer(),
                         "odd theta closed form vs construction at k=" + std::to_string(k) +
                             " m=" + std::to_string(m) + " g=" + std::to_string(g));
                c.expect(degree_identity_check(t), "degree census identity (odd theta witness)");
            }
        }

        // Every legal decorated-theta tuple with p+q+l <= m <= 12.  The q = 1
        // member needs k >= 4 and sits outside this closed form's domain.
        for (int p = 1; p <= 10; ++p)
            for (int q = 2; q <= 11; ++q)
                for (int l = 0; l <= 11; ++l) {
                    if (p + q + l > 12) continue;
                    if (!FamilySpec{Family::C, 3, p, q, l, 0}.is_legal(k)) continue;
                    for (int m = p + q + l; m <= 12; ++m) {
                        FamilySpec spec{Family::C, 3, p, q, l, m - p - q - l};
                        Hypergraph h = build_family(spec, k);
                        c.expect(h.zagreb_index() ==
                                     c3_pendant_formula(k, m, p, q, l).to_integer(),
                                 "decorated theta closed form vs construction " +
                                     spec.to_string());
                    }
                }
    }
}

void criterion_random_moves(Check& c) {
    std::mt19937_64 rng(20240819);
    int successes = 0;
    int attempts = 0;
    while (successes < 1000 && attempts < 40000) {
        ++attempts;
        Hypergraph h = oracle::random_linear(rng, 3 + static_cast<int>(rng() % 2),
                                             2 + static_cast<int>(rng() % 5));
        int n = h.vertex_count();
        if (n > 30) continue;
        int u = static_cast<int>(rng() % static_cast<unsigned long long>(n));
        int v = static_cast<int>(rng() % static_cast<unsigned long long>(n));
        if (u == v) continue;
        std::vector<int> movable;
        for (int e : h.incident_edges(u)) {
            const Edge& edge = h.edge(e);
            if (!std::binary_search(edge.begin(), edge.end(), v)) movable.push_back(e);
        }
        if (movable.empty()) continue;
        int t = 1 + static_cast<int>(rng() % movable.size());
        movable.resize(static_cast<size_t>(t));

        long long du = h.degree(u), dv = h.degree(v);
        MoveResult moved;
        try {
            moved = move_edges(h, {u, v, movable});
        } catch (const error&) {
            continue;  // rerouting would break linearity or duplicate an edge
        }
        ++successes;
        long long direct = moved.graph.zagreb_index() - h.zagreb_index();
        long long closed = move_delta_formula(t, du, dv).to_integer().convert_to<long long>();
        c.expect(moved.delta == direct, "reported delta disagrees with recomputation");
        c.expect(moved.delta == closed, "reported delta disagrees with the closed form");
        if (dv > du - t)
            c.expect(moved.delta > 0, "positivity condition met but the sum did not grow");
        else
            c.expect(moved.delta <= 0, "positivity condition unmet but the sum grew");
    }
    c.expect(successes == 1000, "only " + std::to_string(successes) + " moves were applied");
}

void criterion_enumeration_oracle(Check& c) {
    for (int m = 1; m <= 4; ++m)
        for (int deficit = 0; deficit <= 2; ++deficit) {
            int fast = static_cast<int>(
                enumerate_linear(3, m, StructureClass::from_deficit(deficit)).size());
            int slow = oracle::count_classes(3, m, deficit);
            c.expect(fast == slow, "class count k=3 m=" + std::to_string(m) + " deficit=" +
                                       std::to_string(deficit) + ": " + std::to_string(fast) +
                                       " vs oracle " + std::to_string(slow));
        }
}

void criterion_margin_signs(Check& c) {
    for (long long k : {3, 5}) {
        // Two-cycle maximum strictly decreasing in the girth.
        for (long long m = 8; m <= 40; ++m)
            for (long long g = 3; 2 * (g + 1) <= m; ++g)
                c.expect(b_max_formula(k, m, g + 1) < b_max_formula(k, m, g),
                         "two-cycle maximum not decreasing at m=" + std::to_string(m) +
                             " g=" + std::to_string(g));
        // Theta maximum strictly above the two-cycle maximum wherever both
        // families are populated.
        for (long long g = 4; g <= 8; g += 2)
            for (long long m = 2 * g; m <= 40; ++m)
                c.expect(theorem_even_margin(k, m, g) > Exact(0),
                         "even margin not positive at m=" + std::to_string(m) +
                             " g=" + std::to_string(g));
        for (long long g = 3; g <= 9; g += 2)
            for (long long m = 2 * g; m <= 40; ++m)
                c.expect(theorem_odd_margin(k, m, g) > Exact(0),
                         "odd margin not positive at m=" + std::to_string(m) +
                             " g=" + std::to_string(g));
        // Between the two odd-girth theta shapes the compact one wins.
        for (long long m = 8; m <= 40; ++m)
            for (long long g = 3; 2 * g <= m; g += 2)
                c.expect(c1_odd_formula(k, m, g) < c2_odd_formula(k, m, g),
                         "alternative odd theta overtakes at m=" + std::to_string(m) +
                             " g=" + std::to_string(g));
        // Girth 3 beats girth 4 outright once both are defined.
        for (long long m = 6; m <= 40; ++m)
            c.expect(c1_even_formula(k, m, 4) < c2_odd_formula(k, m, 3),
                     "girth-4 maximum should trail girth 3 at m=" + std::to_string(m));
    }
}

void criterion_labeling_and_classification(Check& c) {
    std::mt19937_64 rng(20240820);
    for (int sample = 0; sample < 20; ++sample) {
        Hypergraph h = oracle::random_linear(rng, 3, 2 + sample % 4);
        if (h.vertex_count() > 15) continue;
        std::string code = canonical_code(h);
        bool stable = true;
        for (int trial = 0; trial < 500 && stable; ++trial) {
            auto perm = oracle::random_permutation(rng, h.vertex_count());
            stable = canonical_code(h.relabeled(perm)) == code;
        }
        c.expect(stable, "canonical code varied across relabelings of sample " +
                             std::to_string(sample));
    }

    int specs_checked = 0;
    for (int k = 3; k <= 4; ++k)
        for (int fam = 0; fam < 2; ++fam)
            for (int variant = 1; variant <= 3; ++variant)
                for (int p = 1; p <= 8; ++p)
                    for (int q = 1; q <= 8; ++q)
                        for (int l = 0; l <= 8; ++l) {
                            if (p + q + l > 8) continue;
                            for (int pendants = 0; pendants <= 2; ++pendants) {
                                FamilySpec spec{fam == 0 ? Family::B : Family::C,
                                                variant, p, q, l, pendants};
                                if (!spec.is_legal(k)) continue;
                                ++specs_checked;
                                ClassifyResult r = classify_bicyclic(build_family(spec, k));
                                c.expect(r.spec == spec && r.notes.empty(),
                                         "classification round trip failed for " +
                                             spec.to_string() + " k=" + std::to_string(k));
                            }
                        }
    c.expect(specs_checked >= 100, "parameter grid unexpectedly small: " +
                                       std::to_string(specs_checked));
}

void criterion_taxonomy(Check& c) {
    for (int m = 4; m <= 6; ++m) {
        VerifyReport r = verify_taxonomy(3, m, parallel_options());
        c.expect(r.verdict == Verdict::pass,
                 "taxonomy incomplete at m=" + std::to_string(m) + ": " + r.observed + "/" +
                     r.expected + " " + r.detail);
    }
}

struct Criterion {
    std::string title;
    std::function<void(Check&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"exhaustive minimum equals the closed form (k=3, m=4..6)", criterion_minimum},
        {"exhaustive global maximum and witness (k=3, m=6)", criterion_global},
        {"exhaustive even-girth theta maximum and witness (k=3, m=6, g=4)", criterion_theta_even},
        {"exhaustive two-cycle maximum and witness (k=3, m=6..7, g=3)", criterion_two_cycle},
        {"closed forms match constructions on the full grid (k=3..5, m<=12)",
         criterion_formula_grid},
        {"1000 random edge moves match the delta closed form", criterion_random_moves},
        {"enumeration counts match an independent exhaustive oracle", criterion_enumeration_oracle},
        {"monotonicity and sign scans hold across the range (m<=40)", criterion_margin_signs},
        {"canonical codes are relabeling-invariant; classification inverts construction",
         criterion_labeling_and_classification},
        {"every enumerated bicyclic class is classified consistently (k=3, m=4..6)",
         criterion_taxonomy},
    };

    std::cout << "acceptance battery: " << criteria.size()
              << " criteria, every comparison exact integer equality\n";

    int failed = 0;
    int index = 0;
    for (const Criterion& criterion : criteria) {
        ++index;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("unexpected exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        const bool ok = check.ok();
        if (!ok) ++failed;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " " << (index < 10 ? "0" : "") << index << " "
                  << criterion.title << " (" << check.comparisons() << " comparisons, " << ms
                  << " ms)" << check.detail() << "\n";
    }

    if (failed == 0) {
        std::cout << "all " << criteria.size() << " criteria passed\n";
        return 0;
    }
    std::cout << failed << " of " << criteria.size() << " criteria failed\n";
    return 1;
}
