#include "starprod/checks.hpp"

#include <chrono>
#include <functional>

#include "starprod/eval.hpp"
#include "starprod/float_scalar.hpp"
#include "starprod/group.hpp"
#include "starprod/hyperbolic.hpp"
#include "starprod/sampling.hpp"

namespace starprod {

namespace {

template <ScalarBackend S>
std::string fmt(const Matrix<S>& m) {
    return format_value<S>(Value<S>(m));
}

template <ScalarBackend S>
std::string fmt(const S& s) {
    return s.str();
}

// One seeded trial of a property. Returns a counterexample description,
// empty on success.
template <ScalarBackend S>
using Trial = std::function<std::string(SplitMix64&)>;

template <ScalarBackend S>
std::string check_assoc2_trial(SplitMix64& rng) {
    Matrix<S> a = sample_matrix<S>(rng, 2), b = sample_matrix<S>(rng, 2),
              c = sample_matrix<S>(rng, 2);
    if (star(star(a, b), c) != star(a, star(b, c)))
        return "A=" + fmt(a) + " B=" + fmt(b) + " C=" + fmt(c);
    return {};
}

template <ScalarBackend S>
std::string check_bilinear_trial(SplitMix64& rng) {
    std::size_t n = 2 + rng.below(3);
    Matrix<S> a = sample_matrix<S>(rng, n), b = sample_matrix<S>(rng, n),
              c = sample_matrix<S>(rng, n);
    S s = sample_scalar<S>(rng);
    bool ok = star(a, b + c) == star(a, b) + star(a, c) &&
              star(b + c, a) == star(b, a) + star(c, a) &&
              star(s * a, b) == s * star(a, b) && star(a, s * b) == s * star(a, b);
    if (!ok) return "A=" + fmt(a) + " B=" + fmt(b) + " C=" + fmt(c) + " s=" + fmt(s);
    return {};
}

template <ScalarBackend S>
std::string check_unit_trial(SplitMix64& rng) {
    std::size_t n = 1 + rng.below(4);
    Matrix<S> a = sample_matrix<S>(rng, n);
    Matrix<S> id = Matrix<S>::identity(n);
    if (star(id, a) != a || star(a, id) != a) return "A=" + fmt(a);
    return {};
}

template <ScalarBackend S>
std::string check_inverse_trial(SplitMix64& rng) {
    Matrix<S> a = sample_invertible<S>(rng);
    Matrix<S> b = star_inverse(a);
    Matrix<S> id = Matrix<S>::identity(2);
    if (star(a, b) != id || star(b, a) != id) return "A=" + fmt(a) + " sinv(A)=" + fmt(b);
    return {};
}

template <ScalarBackend S>
std::string check_zerodiv_trial(SplitMix64& rng) {
    Matrix<S> a = sample_singular_nonzero<S>(rng);
    Matrix<S> b = zero_divisor_witness(a);
    if (b.is_zero() || !star(a, b).is_zero()) return "A=" + fmt(a) + " B=" + fmt(b);
    return {};
}

template <ScalarBackend S>
std::string check_hn_trial(SplitMix64& rng) {
    Matrix<S> a = sample_invertible<S>(rng);
    HNFactorization<S> f = hn_decompose(a);
    bool ok = f.h.is_diagonal() && f.nPart.is_unit_diagonal() && star(f.h, f.nPart) == a;
    if (ok) {
        // uniqueness: re-decomposing the recomposition is the identity
        HNFactorization<S> g = hn_decompose(star(f.h, f.nPart));
        ok = g.h == f.h && g.nPart == f.nPart;
    }
    if (!ok) return "A=" + fmt(a);
    return {};
}

template <ScalarBackend S>
std::string check_conj_trial(SplitMix64& rng) {
    Matrix<S> a0 = sample_diagonal_invertible<S>(rng);
    Matrix<S> b = sample_unit_diagonal<S>(rng);
    Matrix<S> bt = conjugate_n_part(a0, b);
    if (!bt.is_unit_diagonal() || star(a0, b) != star(bt, a0))
        return "A0=" + fmt(a0) + " B=" + fmt(b);
    return {};
}

template <ScalarBackend S>
std::string check_n_law_trial(SplitMix64& rng) {
    Matrix<S> b = sample_unit_diagonal<S>(rng);
    Matrix<S> c = sample_unit_diagonal<S>(rng);
    Matrix<S> expected = Matrix<S>::identity(2) + b.offdiag_part() + c.offdiag_part();
    if (star(b, c) != expected || star(b, c) != star(c, b))
        return "B=" + fmt(b) + " C=" + fmt(c);
    return {};
}

template <ScalarBackend S>
std::string check_phi_hom_trial(SplitMix64& rng) {
    Matrix<S> a = sample_invertible<S>(rng);
    Matrix<S> b = sample_invertible<S>(rng);
    if (phi_map(star(a, b)) != motion_compose(phi_map(a), phi_map(b)))
        return "A=" + fmt(a) + " B=" + fmt(b);
    return {};
}

template <ScalarBackend S>
std::string check_phi_kernel_trial(SplitMix64& rng) {
    S s = sample_nonzero_scalar<S>(rng);
    if (phi_map(s * Matrix<S>::identity(2)) != Motion<S>::identity()) return "s=" + fmt(s);
    for (;;) {
        Matrix<S> a = sample_invertible<S>(rng);
        if (a == a.at(0, 0) * Matrix<S>::identity(2)) continue;
        if (phi_map(a) == Motion<S>::identity()) return "non-scalar A=" + fmt(a);
        return {};
    }
}

template <ScalarBackend S>
std::string check_rho_hom_trial(SplitMix64& rng) {
    Matrix<S> a = sample_invertible<S>(rng);
    Matrix<S> b = sample_invertible<S>(rng);
    if (rho(star(a, b)) != rho(a) * rho(b)) return "A=" + fmt(a) + " B=" + fmt(b);
    return {};
}

template <ScalarBackend S>
std::string check_rho_faithful_trial(SplitMix64& rng) {
    Matrix<S> a = sample_invertible<S>(rng);
    Matrix<S> b = sample_invertible<S>(rng);
    if (a != b && rho(a) == rho(b)) return "A=" + fmt(a) + " B=" + fmt(b);
    return {};
}

template <ScalarBackend S>
std::string check_psi_iso_trial(SplitMix64& rng) {
    S x = sample_nonzero_scalar<S>(rng);
    S y = sample_nonzero_scalar<S>(rng);
    HypRotation<S> r = psi(x);
    bool ok = psi(x * y) == rot_compose(r, psi(y)) && psi_inv(r) == x && psi(psi_inv(r)) == r;
    if (!ok) return "x=" + fmt(x) + " y=" + fmt(y);
    return {};
}

template <ScalarBackend S>
std::string check_minkowski_trial(SplitMix64& rng) {
    HypRotation<S> r = psi(sample_nonzero_scalar<S>(rng));
    Vec2<S> u{sample_scalar<S>(rng), sample_scalar<S>(rng)};
    Vec2<S> v{sample_scalar<S>(rng), sample_scalar<S>(rng)};
    if (minkowski_form(rot_apply(r, u), rot_apply(r, v)) != minkowski_form(u, v))
        return "x=" + fmt(psi_inv(r));
    return {};
}

template <ScalarBackend S>
std::string check_beta_iso_trial(SplitMix64& rng) {
    Matrix<S> b = sample_unit_diagonal<S>(rng);
    Matrix<S> c = sample_unit_diagonal<S>(rng);
    Vec2<S> v{sample_scalar<S>(rng), sample_scalar<S>(rng)};
    bool ok = beta(star(b, c)) == beta(b) + beta(c) && beta_inv(beta(b)) == b &&
              beta(beta_inv(v)) == v;
    if (!ok) return "B=" + fmt(b) + " C=" + fmt(c);
    return {};
}

template <ScalarBackend S>
std::string check_gamma_hom_trial(SplitMix64& rng) {
    Matrix<S> a = sample_diagonal_invertible<S>(rng);
    Matrix<S> b = sample_diagonal_invertible<S>(rng);
    if (gamma(a * b) != gamma(a) * gamma(b)) return "A=" + fmt(a) + " B=" + fmt(b);
    return {};
}

template <ScalarBackend S>
std::string check_hadamard_diag_trial(SplitMix64& rng) {
    std::size_t n = 2 + rng.below(3);
    Matrix<S> a = sample_matrix<S>(rng, n);
    Matrix<S> b = sample_matrix<S>(rng, n);
    if (star(a, b).diag_part() != hadamard(a.diag_part(), b.diag_part()))
        return "A=" + fmt(a) + " B=" + fmt(b);
    return {};
}

template <ScalarBackend S>
std::string check_parser_roundtrip_trial(SplitMix64& rng) {
    Value<S> v;
    switch (rng.below(3)) {
        case 0: v = sample_scalar<S>(rng); break;
        case 1: v = sample_matrix<S>(rng, 1 + rng.below(3)); break;
        default: v = Vec2<S>{sample_scalar<S>(rng), sample_scalar<S>(rng)}; break;
    }
    std::string text = format_value(v);
    Value<S> back = eval_text<S>(text);
    if (back != v) return "text=" + text;
    return {};
}

// Deterministic checks that ignore the trial count.

template <ScalarBackend S>
std::string check_nonassoc3(std::vector<std::string>& failures) {
    NonAssocWitness<S> w = nonassoc_witness<S>(3);
    Matrix<S> expected_lhs(3);
    expected_lhs.at(0, 1) = S::one();
    if (w.lhs != expected_lhs || !w.rhs.is_zero() || w.lhs == w.rhs)
        failures.push_back("n=3 witness: lhs=" + fmt(w.lhs) + " rhs=" + fmt(w.rhs));
    // padded variants stay non-associative
    for (std::size_t n = 4; n <= 6; ++n) {
        NonAssocWitness<S> wn = nonassoc_witness<S>(n);
        if (wn.lhs == wn.rhs) failures.push_back("n=" + std::to_string(n) + " witness collapsed");
    }
    return {};
}

template <ScalarBackend S>
void check_assoc2_exhaustive(std::vector<std::string>& failures, std::uint64_t& trials) {
    // All 2x2 matrices with entries in {-1, 0, 1}: 3^4 = 81, so 81^3 triples.
    std::vector<Matrix<S>> ms;
    ms.reserve(81);
    const S vals[3] = {-S::one(), S::zero(), S::one()};
    for (int i = 0; i < 81; ++i) {
        Matrix<S> m(2);
        int k = i;
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) {
                m.at(r, c) = vals[k % 3];
                k /= 3;
            }
        ms.push_back(std::move(m));
    }
    trials = 0;
    for (const auto& a : ms) {
        std::vector<Matrix<S>> ab;
        ab.reserve(81);
        for (const auto& b : ms) ab.push_back(star(a, b));
        for (std::size_t bi = 0; bi < ms.size(); ++bi)
            for (const auto& c : ms) {
                ++trials;
                if (star(ab[bi], c) != star(a, star(ms[bi], c))) {
                    failures.push_back("A=" + fmt(a) + " B=" + fmt(ms[bi]) + " C=" + fmt(c));
                    if (failures.size() > 10) return;
                }
            }
    }
}

template <ScalarBackend S>
CheckReport run_all(const std::string& property, const CheckOptions& opts) {
    CheckReport report;
    report.property = property;
    report.backend = backend_name(opts.backend);
    report.trials = opts.trials;
    report.seed = opts.seed;

    auto start = std::chrono::steady_clock::now();

    Trial<S> trial;
    if (property == "assoc2") {
        if (opts.exhaustive) {
            check_assoc2_exhaustive<S>(report.failures, report.trials);
        } else {
            trial = check_assoc2_trial<S>;
        }
    } else if (property == "nonassoc3") {
        report.trials = 1;
        check_nonassoc3<S>(report.failures);
    } else if (property == "bilinear") {
        trial = check_bilinear_trial<S>;
    } else if (property == "unit") {
        trial = check_unit_trial<S>;
    } else if (property == "inverse") {
        trial = check_inverse_trial<S>;
    } else if (property == "zerodiv") {
        trial = check_zerodiv_trial<S>;
    } else if (property == "hn") {
        trial = check_hn_trial<S>;
    } else if (property == "conj") {
        trial = check_conj_trial<S>;
    } else if (property == "n-law") {
        trial = check_n_law_trial<S>;
    } else if (property == "phi-hom") {
        trial = check_phi_hom_trial<S>;
    } else if (property == "phi-kernel") {
        trial = check_phi_kernel_trial<S>;
    } else if (property == "rho-hom") {
        trial = check_rho_hom_trial<S>;
    } else if (property == "rho-faithful") {
        trial = check_rho_faithful_trial<S>;
    } else if (property == "psi-iso") {
        trial = check_psi_iso_trial<S>;
    } else if (property == "minkowski") {
        trial = check_minkowski_trial<S>;
    } else if (property == "beta-iso") {
        trial = check_beta_iso_trial<S>;
    } else if (property == "gamma-hom") {
        trial = check_gamma_hom_trial<S>;
    } else if (property == "hadamard-diag") {
        trial = check_hadamard_diag_trial<S>;
    } else if (property == "parser-roundtrip") {
        trial = check_parser_roundtrip_trial<S>;
    } else {
        throw InvalidArgument("unknown property '" + property + "'");
    }

    if (trial) {
        for (std::uint64_t t = 0; t < opts.trials; ++t) {
            // per-trial stream: reproducible from (seed, trial index) alone
            SplitMix64 rng(opts.seed * 0x100000001b3ULL + t);
            std::string failure = trial(rng);
            if (!failure.empty())
                report.failures.push_back("trial " + std::to_string(t) + ": " + failure);
        }
    }

    auto end = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return report;
}

}  // namespace

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = {
        "assoc2",   "nonassoc3",  "bilinear",     "unit",      "inverse",
        "zerodiv",  "hn",         "conj",         "n-law",     "phi-hom",
        "phi-kernel", "rho-hom",  "rho-faithful", "psi-iso",   "minkowski",
        "beta-iso", "gamma-hom",  "hadamard-diag", "parser-roundtrip",
    };
    return names;
}

CheckReport run_check(const std::string& property, const CheckOptions& opts) {
    if (opts.backend == Backend::Float) return run_all<FloatScalar>(property, opts);
    return run_all<Rational>(property, opts);
}

std::pair<Matrix<Rational>, Matrix<Rational>> find_rho_raw_counterexample() {
    // Ordered sampling set; tuples enumerated lexicographically over
    // (a11, a12, a21, a22, b11, b12, b21, b22).
    std::vector<Rational> vals;
    for (int i = 0; i < 6; ++i) vals.push_back(Rational(kSampleNum[i], kSampleDen[i]));

    std::vector<Matrix<Rational>> candidates;
    for (const auto& d0 : vals)
        for (const auto& o0 : vals)
            for (const auto& o1 : vals)
                for (const auto& d1 : vals) {
                    if (d0.is_zero() || d1.is_zero()) continue;
                    Matrix<Rational> m(2);
                    m.at(0, 0) = d0;
                    m.at(0, 1) = o0;
                    m.at(1, 0) = o1;
                    m.at(1, 1) = d1;
                    candidates.push_back(std::move(m));
                }

    for (const auto& a : candidates)
        for (const auto& b : candidates) {
            if (rho_raw_reading(star(a, b)) != rho_raw_reading(a) * rho_raw_reading(b))
                return {a, b};
        }
    throw Error("no raw-reading counterexample found in the sampling set");
}

}  // namespace starprod
