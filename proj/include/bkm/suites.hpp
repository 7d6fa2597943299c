#ifndef BKM_SUITES_HPP
#define BKM_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bkm/classify.hpp"
#include "bkm/parse.hpp"
#include "bkm/rng.hpp"
#include "bkm/structure.hpp"

namespace bkm {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::string detail;  // first failure witness

    void fail(const std::string& d) {
        if (pass) {
            pass = false;
            detail = d;
        }
    }
};

namespace suites {

/// Module-axiom suite: X_m.(Y_n.f) - Y_n.(X_m.f) = [X_m,Y_n].f for all 16
/// ordered family pairs, |m|,|n| <= index_range, over seeded tuples and
/// random f. Exact equality.
inline SuiteResult brackets(std::uint64_t seed, long long index_range = 4, unsigned tuples = 5,
                            unsigned trials = 25, unsigned max_deg = 5) {
    SuiteResult result{"brackets"};
    const Family fams[] = {Family::L, Family::M, Family::S, Family::I};
    const std::size_t span = static_cast<std::size_t>(2 * index_range + 1);
    for (unsigned tu = 0; tu < tuples && result.pass; ++tu) {
        SeededRng rng = SeededRng::for_trial(seed, tu);
        PhiParams params = rng.next_params();
        for (unsigned tr = 0; tr < trials && result.pass; ++tr) {
            BiPoly f = rng.next_poly(max_deg, max_deg);
            // inner applications Y_n.f, and Z_k.f for the bracket values
            std::vector<BiPoly> inner(4 * span);
            for (int y = 0; y < 4; ++y)
                for (long long n = -index_range; n <= index_range; ++n)
                    inner[y * span + (n + index_range)] = act_generator(params, {fams[y], n}, f);
            const std::size_t zspan = 4 * static_cast<std::size_t>(index_range) + 1;
            std::vector<BiPoly> zcache(4 * zspan);
            for (int z = 0; z < 4; ++z)
                for (long long k = -2 * index_range; k <= 2 * index_range; ++k)
                    zcache[z * zspan + (k + 2 * index_range)] = act_generator(params, {fams[z], k}, f);
            std::vector<BiPoly> outer(16 * span * span);
            for (int x = 0; x < 4; ++x)
                for (long long m = -index_range; m <= index_range; ++m)
                    for (int y = 0; y < 4; ++y)
                        for (long long n = -index_range; n <= index_range; ++n)
                            outer[((x * span + (m + index_range)) * 4 + y) * span + (n + index_range)] =
                                act_generator(params, {fams[x], m}, inner[y * span + (n + index_range)]);
            for (int x = 0; x < 4 && result.pass; ++x)
                for (long long m = -index_range; m <= index_range && result.pass; ++m)
                    for (int y = 0; y < 4 && result.pass; ++y)
                        for (long long n = -index_range; n <= index_range; ++n) {
                            const BiPoly& xy =
                                outer[((x * span + (m + index_range)) * 4 + y) * span + (n + index_range)];
                            const BiPoly& yx =
                                outer[((y * span + (n + index_range)) * 4 + x) * span + (m + index_range)];
                            AlgebraElement br = bracket(Generator{fams[x], m}, Generator{fams[y], n});
                            BiPoly rhs;
                            for (const auto& [g, c] : br.terms())
                                rhs += c * zcache[static_cast<int>(g.family) * zspan +
                                                  (g.index + 2 * index_range)];
                            if (xy - yx != rhs) {
                                result.fail("pair (" + std::string(1, family_letter(fams[x])) + "," +
                                            std::string(1, family_letter(fams[y])) + ") m=" +
                                            std::to_string(m) + " n=" + std::to_string(n) + " tuple " +
                                            std::to_string(tu));
                                break;
                            }
                        }
        }
    }
    return result;
}

/// Jacobi identity: exhaustive generator triples with small indices, plus
/// seeded random triples over a wider range.
inline SuiteResult jacobi(std::uint64_t seed, long long exhaustive_range = 3, long long random_range = 6,
                          unsigned random_trials = 500) {
    SuiteResult result{"jacobi"};
    const Family fams[] = {Family::L, Family::M, Family::S, Family::I};
    for (Family fx : fams)
        for (Family fy : fams)
            for (Family fz : fams)
                for (long long a = -exhaustive_range; a <= exhaustive_range; ++a)
                    for (long long b = -exhaustive_range; b <= exhaustive_range; ++b)
                        for (long long c = -exhaustive_range; c <= exhaustive_range; ++c)
                            if (!jacobi_defect({fx, a}, {fy, b}, {fz, c}).is_zero()) {
                                result.fail("exhaustive triple " + Generator{fx, a}.str() + " " +
                                            Generator{fy, b}.str() + " " + Generator{fz, c}.str());
                                return result;
                            }
    SeededRng rng(seed, 0x6a61636f62ULL);
    for (unsigned tr = 0; tr < random_trials; ++tr) {
        Generator g[3];
        for (auto& gi : g)
            gi = {fams[rng.next_int(0, 3)], rng.next_int(-static_cast<long>(random_range),
                                                         static_cast<long>(random_range))};
        if (!jacobi_defect(g[0], g[1], g[2]).is_zero()) {
            result.fail("random triple " + g[0].str() + " " + g[1].str() + " " + g[2].str());
            return result;
        }
    }
    return result;
}

/// Representation-level commutation identities (L_0 acts by s, M_0 by t):
///   I_m.(s^i f) = (s-m)^i (I_m.f)
///   S_m.(s^i f) = (s-m)^i (S_m.f)
///   I_m.(t^i f) = t^i (I_m.f) + i m t^(i-1) (S_m.f)
inline SuiteResult lemma_identities(std::uint64_t seed, unsigned max_i = 4, long long max_m = 4,
                                    unsigned trials = 20, unsigned max_deg = 4) {
    SuiteResult result{"lemma_identities"};
    for (unsigned i = 0; i <= max_i && result.pass; ++i) {
        for (long long m = -max_m; m <= max_m && result.pass; ++m) {
            SeededRng rng = SeededRng::for_trial(seed, (i * 1000 + static_cast<unsigned>(m + max_m)));
            for (unsigned tr = 0; tr < trials; ++tr) {
                PhiParams params = rng.next_params();
                BiPoly f = rng.next_poly(max_deg, max_deg);
                BiPoly s_pow(1), t_pow(1);
                for (unsigned k = 0; k < i; ++k) {
                    s_pow = s_pow * BiPoly::var_s();
                    t_pow = t_pow * BiPoly::var_t();
                }
                BiPoly s_minus_m_pow(1);
                BiPoly s_minus_m = BiPoly::var_s() - BiPoly(GaussianRational(mpq_class(static_cast<long>(m))));
                for (unsigned k = 0; k < i; ++k) s_minus_m_pow = s_minus_m_pow * s_minus_m;

                BiPoly im_f = act_generator(params, {Family::I, m}, f);
                BiPoly sm_f = act_generator(params, {Family::S, m}, f);
                if (act_generator(params, {Family::I, m}, s_pow * f) != s_minus_m_pow * im_f ||
                    act_generator(params, {Family::S, m}, s_pow * f) != s_minus_m_pow * sm_f) {
                    result.fail("s-power identity at i=" + std::to_string(i) + " m=" + std::to_string(m));
                    break;
                }
                BiPoly rhs = t_pow * im_f;
                if (i >= 1) {
                    BiPoly t_pow_1(1);
                    for (unsigned k = 0; k + 1 < i; ++k) t_pow_1 = t_pow_1 * BiPoly::var_t();
                    rhs += (static_cast<long>(i) * GaussianRational(mpq_class(static_cast<long>(m)))) *
                           (t_pow_1 * sm_f);
                }
                if (act_generator(params, {Family::I, m}, t_pow * f) != rhs) {
                    result.fail("t-power identity at i=" + std::to_string(i) + " m=" + std::to_string(m));
                    break;
                }
            }
        }
    }
    return result;
}

/// Classification traces: verify_claims passes and the traces are t-only.
inline SuiteResult claims(std::uint64_t seed, unsigned tuples = 50, long long range = 5) {
    SuiteResult result{"claims"};
    for (unsigned tu = 0; tu < tuples; ++tu) {
        SeededRng rng = SeededRng::for_trial(seed, 0xc1a1350000ULL + tu);
        PhiParams params = rng.next_params();
        ActionTrace trace = action_trace(params, range);
        for (long long m = -range; m <= range; ++m)
            if (trace.a.at(m).deg_s() > 0 || trace.b.at(m).deg_s() > 0) {
                result.fail("trace not t-only, tuple " + std::to_string(tu));
                return result;
            }
        ClaimReport report = verify_claims(trace, params);
        if (!report.all_pass()) {
            for (const auto& e : report.entries)
                if (!e.pass) {
                    result.fail("tuple " + std::to_string(tu) + ": " + e.name + " (" + e.detail + ")");
                    break;
                }
            return result;
        }
    }
    return result;
}

/// Reconstruction roundtrips: extract_params recovers seeded tuples exactly,
/// and solve_h recovers h for tuples with beta != 0.
inline SuiteResult roundtrips(std::uint64_t seed, unsigned extract_trials = 100, unsigned solve_trials = 50) {
    SuiteResult result{"roundtrips"};
    for (unsigned tu = 0; tu < extract_trials; ++tu) {
        SeededRng rng = SeededRng::for_trial(seed, 0xe774ac70000ULL + tu);
        PhiParams params = rng.next_params();
        try {
            PhiParams recovered = extract_params(oracle_of(params));
            if (!(recovered == params)) {
                result.fail("extract_params mismatch, tuple " + std::to_string(tu));
                return result;
            }
        } catch (const DomainError& e) {
            result.fail("extract_params threw on tuple " + std::to_string(tu) + ": " + e.what());
            return result;
        }
    }
    for (unsigned tu = 0; tu < solve_trials; ++tu) {
        SeededRng rng = SeededRng::for_trial(seed, 0x501e40000ULL + tu);
        PhiParams params = rng.next_params();
        GaussianRational beta = params.beta;
        while (beta.is_zero()) beta = rng.next_scalar();
        PhiParams p(params.lambda, params.alpha, beta, params.rho, params.h);
        BiPoly b1 = act_generator(p, {Family::I, 1}, BiPoly(1));
        BiPoly h = solve_h(b1, p.lambda, p.alpha, p.beta, p.rho, p.h.eval_t(p.alpha));
        if (h != p.h) {
            result.fail("solve_h mismatch, tuple " + std::to_string(tu));
            return result;
        }
    }
    return result;
}

namespace detail {
inline PhiParams seeded_irreducible_params(std::uint64_t seed, unsigned tu) {
    SeededRng rng = SeededRng::for_trial(seed, 0x0bb17000ULL + tu);
    for (;;) {
        PhiParams p = rng.next_params();
        if (is_irreducible(p)) return p;
    }
}
}  // namespace detail

/// Irreducibility corroboration: orbits from several starts reach 1 (with a
/// rechecked certificate) when alpha != 0 or beta != 0; in the alpha=beta=0
/// case the t-power ideals are invariant and the orbit of t stays inside.
inline SuiteResult orbit_irreducibility(std::uint64_t seed, long long index_range = 3,
                                        DegreeBox box = {8, 8}, unsigned random_tuples = 10) {
    SuiteResult result{"orbit_irreducibility"};
    std::vector<PhiParams> tuples;
    tuples.push_back(PhiParams(GaussianRational(1), GaussianRational(1), GaussianRational(0),
                               GaussianRational(0), BiPoly()));
    tuples.push_back(PhiParams(GaussianRational(1), GaussianRational(0), GaussianRational(1),
                               GaussianRational(0), BiPoly()));
    for (unsigned tu = 0; tu < random_tuples; ++tu)
        tuples.push_back(detail::seeded_irreducible_params(seed, tu));
    const BiPoly starts[] = {BiPoly(1), BiPoly::var_t(), BiPoly::var_s(),
                             BiPoly::var_s() * BiPoly::var_t() + BiPoly(1)};
    for (std::size_t tu = 0; tu < tuples.size(); ++tu) {
        for (const BiPoly& start : starts) {
            OrbitReport report = orbit_closure(tuples[tu], start, index_range, box);
            if (!report.contains_one || !verify_one_certificate(report)) {
                result.fail("orbit failed to certify 1, tuple " + std::to_string(tu) + " start " +
                            start.str());
                return result;
            }
        }
    }
    // reducible case alpha = beta = 0
    for (unsigned tu = 0; tu < 3; ++tu) {
        SeededRng rng = SeededRng::for_trial(seed, 0x4ed000ULL + tu);
        PhiParams p(rng.next_nonzero_scalar(), GaussianRational(0), GaussianRational(0), rng.next_scalar(),
                    rng.next_t_poly(3));
        for (unsigned i = 1; i <= 3; ++i) {
            auto check = check_invariant_subspace(p, SubspaceDescriptor::t_power_ideal(i), 4, box);
            if (!check.invariant) {
                result.fail("t_power_ideal(" + std::to_string(i) + ") not invariant, tuple " +
                            std::to_string(tu) + " witness " + check.witness_monomial.str() + " under " +
                            check.witness_generator.str());
                return result;
            }
        }
        OrbitReport report = orbit_closure(p, BiPoly::var_t(), index_range, box);
        if (report.contains_one) {
            result.fail("orbit of t escaped t*C[s,t], tuple " + std::to_string(tu));
            return result;
        }
    }
    return result;
}

/// Quotient layers (alpha = beta = 0): the full action reduced mod t^(i+1)
/// matches the induced layer action; the s-ideal is invariant exactly when
/// h(0) = i and rho = 0, and otherwise the layer orbit of s reaches 1.
inline SuiteResult quotient_layers(std::uint64_t seed, unsigned max_i = 3, long long max_m = 3,
                                   unsigned trials = 20, unsigned max_s = 8) {
    SuiteResult result{"quotient_layers"};
    const Family fams[] = {Family::L, Family::M, Family::S, Family::I};
    for (unsigned i = 0; i <= max_i && result.pass; ++i) {
        SeededRng rng = SeededRng::for_trial(seed, 0x400000ULL + i);
        PhiParams p(rng.next_nonzero_scalar(), GaussianRational(0), GaussianRational(0), rng.next_scalar(),
                    rng.next_t_poly(3));
        BiPoly t_pow(1);
        for (unsigned k = 0; k < i; ++k) t_pow = t_pow * BiPoly::var_t();
        for (unsigned tr = 0; tr < trials && result.pass; ++tr) {
            BiPoly g = rng.next_poly(5, 0);
            for (Family fam : fams) {
                for (long long m = -max_m; m <= max_m; ++m) {
                    BiPoly full = act_generator(p, {fam, m}, t_pow * g).drop_t_at_least(i + 1);
                    BiPoly layer = t_pow * quotient_act(p, {i}, {fam, m}, g);
                    if (full != layer) {
                        result.fail("layer mismatch i=" + std::to_string(i) + " generator " +
                                    Generator{fam, m}.str());
                        break;
                    }
                }
                if (!result.pass) break;
            }
        }
    }
    if (!result.pass) return result;
    for (unsigned i = 0; i <= max_i; ++i) {
        SeededRng rng = SeededRng::for_trial(seed, 0x500000ULL + i);
        // h(0) = i, rho = 0: the s-ideal of the layer is invariant
        BiPoly h = rng.next_t_poly(3);
        h = h - BiPoly(h.eval_t(GaussianRational())) + BiPoly(GaussianRational(static_cast<long>(i)));
        PhiParams reducible(rng.next_nonzero_scalar(), GaussianRational(0), GaussianRational(0),
                            GaussianRational(0), h);
        auto check = check_invariant_subspace(reducible, SubspaceDescriptor::quotient_s_ideal(i), max_m,
                                              {max_s, 0});
        if (!check.invariant) {
            result.fail("quotient_s_ideal(" + std::to_string(i) + ") not invariant");
            return result;
        }
        if (quotient_irreducible(reducible, {i})) {
            result.fail("quotient_irreducible wrong on the reducible layer i=" + std::to_string(i));
            return result;
        }
        // h(0) != i or rho != 0: the layer orbit of s reaches 1
        BiPoly h2 = h + BiPoly(1);  // h2(0) = i + 1
        PhiParams irr1(reducible.lambda, GaussianRational(0), GaussianRational(0), GaussianRational(0), h2);
        PhiParams irr2(reducible.lambda, GaussianRational(0), GaussianRational(0),
                       rng.next_nonzero_scalar(), h);
        for (const PhiParams& p : {irr1, irr2}) {
            if (!quotient_irreducible(p, {i})) {
                result.fail("quotient_irreducible wrong on an irreducible layer i=" + std::to_string(i));
                return result;
            }
            OrbitReport report = quotient_orbit_closure(p, {i}, BiPoly::var_s(), max_m, max_s);
            if (!report.contains_one || !verify_one_certificate(report)) {
                result.fail("layer orbit of s did not certify 1 at i=" + std::to_string(i));
                return result;
            }
        }
    }
    return result;
}

/// Restriction to the {L,M} span: alpha != 0 orbits reach 1, alpha = 0 keeps
/// t C[s,t] invariant, and the L/M actions never depend on (beta, rho).
inline SuiteResult bms_restriction(std::uint64_t seed, long long index_range = 3, DegreeBox box = {8, 8},
                                   unsigned tuples = 5) {
    SuiteResult result{"bms_restriction"};
    for (unsigned tu = 0; tu < tuples; ++tu) {
        SeededRng rng = SeededRng::for_trial(seed, 0xb3000ULL + tu);
        GaussianRational lambda = rng.next_nonzero_scalar();
        GaussianRational alpha = rng.next_nonzero_scalar();
        BiPoly h = rng.next_t_poly(3);
        PhiParams with_alpha(lambda, alpha, rng.next_scalar(), rng.next_scalar(), h);
        OrbitReport report =
            orbit_closure(with_alpha, BiPoly::var_t(), index_range, box, Subalgebra::bms);
        if (!report.contains_one || !verify_one_certificate(report)) {
            result.fail("restricted orbit did not certify 1, tuple " + std::to_string(tu));
            return result;
        }
        PhiParams without_alpha(lambda, GaussianRational(0), rng.next_scalar(), rng.next_scalar(), h);
        auto check = check_invariant_subspace(without_alpha, SubspaceDescriptor::t_power_ideal(1),
                                              index_range, box, Subalgebra::bms);
        if (!check.invariant) {
            result.fail("t*C[s,t] not {L,M}-invariant at alpha=0, tuple " + std::to_string(tu));
            return result;
        }
        // L/M actions depend only on (lambda, alpha, h)
        PhiParams varied(lambda, alpha, rng.next_scalar(), rng.next_scalar(), h);
        for (unsigned tr = 0; tr < 5; ++tr) {
            BiPoly f = rng.next_poly(4, 4);
            for (long long m = -index_range; m <= index_range; ++m) {
                if (act_generator(with_alpha, {Family::L, m}, f) !=
                        act_generator(varied, {Family::L, m}, f) ||
                    act_generator(with_alpha, {Family::M, m}, f) !=
                        act_generator(varied, {Family::M, m}, f)) {
                    result.fail("L/M action changed under (beta, rho) variation, tuple " +
                                std::to_string(tu));
                    return result;
                }
            }
        }
    }
    return result;
}

/// Isomorphism is exact tuple equality: true on equal tuples, false under
/// every single-coordinate perturbation.
inline SuiteResult isomorphism(std::uint64_t seed, unsigned tuples = 20) {
    SuiteResult result{"isomorphism"};
    for (unsigned tu = 0; tu < tuples; ++tu) {
        SeededRng rng = SeededRng::for_trial(seed, 0x150000ULL + tu);
        PhiParams p = rng.next_params();
        if (!iso_check(p, p)) {
            result.fail("iso_check(p, p) false, tuple " + std::to_string(tu));
            return result;
        }
        GaussianRational bump(1);
        GaussianRational lambda2 = p.lambda + bump;
        if (lambda2.is_zero()) lambda2 = p.lambda + GaussianRational(2);
        PhiParams perturbed[] = {
            PhiParams(lambda2, p.alpha, p.beta, p.rho, p.h),
            PhiParams(p.lambda, p.alpha + bump, p.beta, p.rho, p.h),
            PhiParams(p.lambda, p.alpha, p.beta + bump, p.rho, p.h),
            PhiParams(p.lambda, p.alpha, p.beta, p.rho + bump, p.h),
            PhiParams(p.lambda, p.alpha, p.beta, p.rho, p.h + BiPoly::var_t()),
        };
        for (const PhiParams& q : perturbed)
            if (iso_check(p, q)) {
                result.fail("iso_check true under perturbation, tuple " + std::to_string(tu));
                return result;
            }
    }
    return result;
}

/// Parse/print roundtrip on seeded random polynomials.
inline SuiteResult parse_roundtrip(std::uint64_t seed, unsigned trials = 200) {
    SuiteResult result{"parse_roundtrip"};
    for (unsigned tr = 0; tr < trials; ++tr) {
        SeededRng rng = SeededRng::for_trial(seed, 0x9a45e0000ULL + tr);
        BiPoly f = rng.next_poly(5, 5, 8);
        if (tr % 17 == 0) f = BiPoly();  // include the zero polynomial
        BiPoly reparsed = parse_poly(f.str());
        if (reparsed != f) {
            result.fail("roundtrip mismatch on \"" + f.str() + "\"");
            return result;
        }
    }
    return result;
}

}  // namespace suites
}  // namespace bkm

#endif
