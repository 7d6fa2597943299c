#ifndef BKM_STRUCTURE_HPP
#define BKM_STRUCTURE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bkm/errors.hpp"
#include "bkm/phi.hpp"

namespace bkm {

/// Exact row-reduced span over Q(i), on the monomial basis of a DegreeBox.
/// Every basis row keeps the linear combination of originally inserted
/// vectors it came from, so membership answers carry checkable certificates.
class SpanBasis {
public:
    explicit SpanBasis(DegreeBox box) : box_(box) {
        for (unsigned d = 0; d <= box.max_s + box.max_t; ++d)
            for (unsigned j = 0; j <= std::min(d, box.max_s); ++j)
                if (d - j <= box.max_t) monomials_.push_back({j, d - j});
    }

    std::size_t dimension() const { return rows_.size(); }
    const DegreeBox& box() const { return box_; }

    /// Insert a vector; returns true iff it added a new direction.
    bool insert(const BiPoly& v) {
        if (!box_.fits(v)) throw BoxOverflow();
        auto [coords, combo] = reduce(v);
        std::size_t pivot = first_nonzero(coords);
        if (pivot == coords.size()) return false;
        combo.emplace_back(originals_.size(), GaussianRational(1));
        originals_.push_back(v);
        normalize(coords, combo, pivot);
        insert_row(std::move(coords), std::move(combo), pivot);
        if (rows_.size() > box_.dimension())
            throw std::logic_error("span basis exceeded box dimension");  // arithmetic tripwire
        return true;
    }

    /// If w lies in the span, return the combination of inserted originals
    /// that produces it; otherwise nullopt.
    std::optional<std::vector<std::pair<BiPoly, GaussianRational>>> express(const BiPoly& w) const {
        if (!box_.fits(w)) return std::nullopt;
        auto [coords, combo] = reduce(w);
        if (first_nonzero(coords) != coords.size()) return std::nullopt;
        // reduce() returns w - sum(combo * originals) = 0
        std::vector<std::pair<BiPoly, GaussianRational>> out;
        for (auto& [idx, c] : combo) out.emplace_back(originals_[idx], c);
        return out;
    }

    std::vector<BiPoly> basis() const {
        std::vector<BiPoly> out;
        for (const auto& r : rows_) out.push_back(from_coords(r.coords));
        return out;
    }

private:
    struct Row {
        std::vector<GaussianRational> coords;
        std::vector<std::pair<std::size_t, GaussianRational>> combo;
        std::size_t pivot;
    };

    std::vector<GaussianRational> to_coords(const BiPoly& p) const {
        std::vector<GaussianRational> c(monomials_.size());
        for (std::size_t i = 0; i < monomials_.size(); ++i) c[i] = p.coeff(monomials_[i].s, monomials_[i].t);
        return c;
    }
    BiPoly from_coords(const std::vector<GaussianRational>& c) const {
        BiPoly p;
        for (std::size_t i = 0; i < c.size(); ++i) p.add_term(monomials_[i], c[i]);
        return p;
    }
    static std::size_t first_nonzero(const std::vector<GaussianRational>& c) {
        std::size_t i = 0;
        while (i < c.size() && c[i].is_zero()) ++i;
        return i;
    }

    // Eliminate v against the current rows; returns (residual coords, combo)
    // with residual = v - sum combo[r] * original[r].
    std::pair<std::vector<GaussianRational>, std::vector<std::pair<std::size_t, GaussianRational>>> reduce(
        const BiPoly& v) const {
        auto coords = to_coords(v);
        std::map<std::size_t, GaussianRational> combo;
        for (const auto& row : rows_) {
            const GaussianRational& c = coords[row.pivot];
            if (c.is_zero()) continue;
            GaussianRational factor = c;  // row pivot is normalized to 1
            for (std::size_t i = row.pivot; i < coords.size(); ++i)
                if (!row.coords[i].is_zero()) coords[i] -= factor * row.coords[i];
            for (const auto& [idx, rc] : row.combo) {
                auto [it, ins] = combo.try_emplace(idx, factor * rc);
                if (!ins) {
                    it->second += factor * rc;
                    if (it->second.is_zero()) combo.erase(it);
                }
            }
        }
        return {std::move(coords), {combo.begin(), combo.end()}};
    }

    static void normalize(std::vector<GaussianRational>& coords,
                          std::vector<std::pair<std::size_t, GaussianRational>>& combo, std::size_t pivot) {
        GaussianRational inv = coords[pivot].inverse();
        for (auto& c : coords)
            if (!c.is_zero()) c *= inv;
        for (auto& [idx, c] : combo) c *= inv;
    }

    void insert_row(std::vector<GaussianRational> coords,
                    std::vector<std::pair<std::size_t, GaussianRational>> combo, std::size_t pivot) {
        // combo currently tracks v - residual; flip so row = sum combo * originals
        for (auto& [idx, c] : combo)
            if (idx + 1 != originals_.size()) c = -c;
        Row row{std::move(coords), std::move(combo), pivot};
        // back-eliminate the new pivot so the basis stays fully reduced
        for (auto& r : rows_) {
            const GaussianRational f = r.coords[pivot];
            if (f.is_zero()) continue;
            for (std::size_t i = pivot; i < r.coords.size(); ++i)
                if (!row.coords[i].is_zero()) r.coords[i] -= f * row.coords[i];
            std::map<std::size_t, GaussianRational> merged(r.combo.begin(), r.combo.end());
            for (const auto& [idx, c] : row.combo) {
                auto [it, ins] = merged.try_emplace(idx, -(f * c));
                if (!ins) {
                    it->second -= f * c;
                    if (it->second.is_zero()) merged.erase(it);
                }
            }
            r.combo.assign(merged.begin(), merged.end());
        }
        auto it = rows_.begin();
        while (it != rows_.end() && it->pivot < pivot) ++it;
        rows_.insert(it, std::move(row));
    }

    DegreeBox box_;
    std::vector<Monomial> monomials_;  // grlex ascending
    std::vector<Row> rows_;            // sorted by pivot
    std::vector<BiPoly> originals_;
};

/// Row-reduce a family of vectors; returns the reduced basis and dimension.
inline std::pair<std::vector<BiPoly>, std::size_t> span_reduce(const std::vector<BiPoly>& vectors,
                                                               DegreeBox box) {
    SpanBasis span(box);
    for (const auto& v : vectors) span.insert(v);
    return {span.basis(), span.dimension()};
}

/// Result of a submodule-orbit closure. contains_one = true certifies that 1
/// lies in the span of retained vectors (the certificate is included);
/// truncated = true means contains_one = false is inconclusive.
struct OrbitReport {
    std::size_t basis_size = 0;
    bool contains_one = false;
    bool truncated = false;
    long long index_range = 0;
    DegreeBox box;
    std::vector<std::pair<BiPoly, GaussianRational>> one_certificate;
};

/// Exact recheck of a certificate: the stated combination must sum to 1.
inline bool verify_one_certificate(const OrbitReport& report) {
    if (!report.contains_one) return false;
    BiPoly sum;
    for (const auto& [v, c] : report.one_certificate) sum += c * v;
    return sum == BiPoly(1);
}

namespace detail {

inline OrbitReport orbit_closure_impl(const std::function<BiPoly(Generator, const BiPoly&)>& apply,
                                      const std::vector<Family>& families, const BiPoly& start,
                                      long long index_range, DegreeBox box) {
    if (start.is_zero()) throw ZeroStart();
    if (!box.fits(start)) throw BoxOverflow();
    OrbitReport report;
    report.index_range = index_range;
    report.box = box;
    SpanBasis span(box);
    span.insert(start);
    std::vector<BiPoly> frontier{start};
    while (!frontier.empty() && span.dimension() < box.dimension()) {
        std::vector<BiPoly> next;
        for (const auto& v : frontier) {
            for (Family fam : families) {
                for (long long m = -index_range; m <= index_range; ++m) {
                    BiPoly w = apply({fam, m}, v);
                    if (w.is_zero()) continue;
                    if (!box.fits(w)) {
                        report.truncated = true;
                        continue;
                    }
                    if (span.insert(w)) next.push_back(std::move(w));
                }
            }
        }
        frontier = std::move(next);
    }
    report.basis_size = span.dimension();
    if (auto cert = span.express(BiPoly(1))) {
        report.contains_one = true;
        report.one_certificate = std::move(*cert);
    }
    return report;
}

inline std::vector<Family> families_of(std::optional<Subalgebra> restrict_to) {
    std::vector<Family> fams;
    for (Family f : {Family::L, Family::M, Family::S, Family::I})
        if (!restrict_to || family_in_subalgebra(f, *restrict_to)) fams.push_back(f);
    return fams;
}

}  // namespace detail

/// Breadth-first closure of the submodule generated by start, truncated to
/// the box. Deterministic: frontier vectors in insertion order, generators
/// ordered (family, index ascending).
inline OrbitReport orbit_closure(const PhiParams& params, const BiPoly& start, long long index_range,
                                 DegreeBox box, std::optional<Subalgebra> restrict_to = std::nullopt) {
    return detail::orbit_closure_impl(
        [&](Generator g, const BiPoly& f) { return act_generator(params, g, f); },
        detail::families_of(restrict_to), start, index_range, box);
}

/// Orbit closure inside a filtration layer (alpha = beta = 0), on coefficient
/// polynomials g(s).
inline OrbitReport quotient_orbit_closure(const PhiParams& params, QuotientLevel level, const BiPoly& start,
                                          long long index_range, unsigned max_s) {
    return detail::orbit_closure_impl(
        [&](Generator g, const BiPoly& f) { return quotient_act(params, level, g, f); },
        {Family::L, Family::M, Family::S, Family::I}, start, index_range, DegreeBox{max_s, 0});
}

/// Invariant-subspace descriptors: the t-power ideal t^i C[s,t] of the full
/// module, or the ideal s C[s] in the level-i quotient layer.
struct SubspaceDescriptor {
    enum class Kind { t_power_ideal, quotient_s_ideal } kind;
    unsigned level;

    static SubspaceDescriptor t_power_ideal(unsigned i) { return {Kind::t_power_ideal, i}; }
    static SubspaceDescriptor quotient_s_ideal(unsigned i) { return {Kind::quotient_s_ideal, i}; }
    static SubspaceDescriptor from_name(const std::string& name, unsigned i) {
        if (name == "t_power_ideal") return t_power_ideal(i);
        if (name == "quotient_s_ideal") return quotient_s_ideal(i);
        throw UnknownDescriptor(name);
    }
};

struct InvariantCheck {
    bool invariant = true;
    BiPoly witness_monomial;   // set on failure
    Generator witness_generator{Family::L, 0};
};

/// Apply every generator with |m| <= index_range to each spanning monomial of
/// the subspace that fits the box; membership per monomial is exact.
inline InvariantCheck check_invariant_subspace(const PhiParams& params, SubspaceDescriptor subspace,
                                               long long index_range, DegreeBox box,
                                               std::optional<Subalgebra> restrict_to = std::nullopt) {
    InvariantCheck result;
    auto fams = detail::families_of(restrict_to);
    auto fail = [&](const BiPoly& mono, Generator g) {
        result.invariant = false;
        result.witness_monomial = mono;
        result.witness_generator = g;
    };
    if (subspace.kind == SubspaceDescriptor::Kind::t_power_ideal) {
        for (unsigned j = 0; j <= box.max_s && result.invariant; ++j) {
            for (unsigned k = subspace.level; k <= box.max_t && result.invariant; ++k) {
                BiPoly mono = BiPoly::monomial(j, k);
                for (Family fam : fams) {
                    for (long long m = -index_range; m <= index_range; ++m) {
                        BiPoly image = act_generator(params, {fam, m}, mono);
                        if (image.drop_t_at_least(subspace.level) != BiPoly()) {
                            fail(mono, {fam, m});
                            break;
                        }
                    }
                    if (!result.invariant) break;
                }
            }
        }
        return result;
    }
    // quotient_s_ideal: spanning monomials s^j, j >= 1, in the layer-i quotient
    QuotientLevel level{subspace.level};
    for (unsigned j = 1; j <= box.max_s && result.invariant; ++j) {
        BiPoly mono = BiPoly::monomial(j, 0);
        for (Family fam : fams) {
            for (long long m = -index_range; m <= index_range; ++m) {
                BiPoly image = quotient_act(params, level, {fam, m}, mono);
                bool divisible_by_s = true;
                for (const auto& [mon, c] : image.terms())
                    if (mon.s == 0) divisible_by_s = false;
                if (!divisible_by_s) {
                    fail(mono, {fam, m});
                    break;
                }
            }
            if (!result.invariant) break;
        }
    }
    return result;
}

/// Smallest m >= 1 with L_m . v != 0. The L_m action raises deg_s by exactly
/// one, so the answer is always 1; that invariant is asserted here.
inline long long first_nontrivial_L(const PhiParams& params, const BiPoly& v) {
    if (v.is_zero()) throw ZeroVector();
    for (long long m = 1;; ++m) {
        BiPoly image = act_generator(params, {Family::L, m}, v);
        if (!image.is_zero()) {
            if (m != 1 || image.deg_s() != v.deg_s() + 1)
                throw std::logic_error("L-action failed to raise s-degree");
            return m;
        }
    }
}

}  // namespace bkm

#endif
