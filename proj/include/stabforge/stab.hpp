#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stabforge/errors.hpp"
#include "stabforge/gf.hpp"
#include "stabforge/linalg.hpp"
#include "stabforge/pauli.hpp"
#include "stabforge/rng.hpp"

namespace stabforge {

// An abelian subgroup of P_n with independent generators; the group it
// generates has size q^ell.
struct Stabilizer {
    FieldPtr field;
    std::size_t n = 0;
    std::vector<PauliVec> gens;

    std::size_t ell() const { return gens.size(); }
    PauliSpace space() const { return {field, n}; }
};

namespace detail {

// Row j encodes the linear functional sigma -> symp(sigma, g_j) applied to
// phi_G(sigma): (g_z | -g_x).
inline linalg::Mat constraint_matrix(const PauliSpace& space, std::span<const PauliVec> gens) {
    const Field& F = *space.field;
    linalg::Mat rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        linalg::Vec r(2 * space.n);
        for (std::size_t i = 0; i < space.n; ++i) {
            r[i] = g.z(i);
            r[space.n + i] = F.neg(g.x(i));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

inline linalg::Mat phi_g_rows(std::span<const PauliVec> gens) {
    linalg::Mat rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) rows.push_back(phi_g(g));
    return rows;
}

inline bool independent(const Field& F, std::span<const PauliVec> gens) {
    if (gens.empty()) return true;
    return linalg::rank(F, phi_g_rows(gens)) == gens.size();
}

}  // namespace detail

// Checks the three stabilizer invariants and wraps the generators:
// pairwise commuting, independent phi_G images, hence a group of size q^ell.
inline Stabilizer validate(const PauliSpace& space, std::vector<PauliVec> gens) {
    for (const auto& g : gens) {
        g.field().require_same(*space.field);
        if (g.n() != space.n) throw DimensionMismatch("generator has wrong n");
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (symp(gens[i], gens[j]) != 0) throw NotCommuting(i, j);
    if (!detail::independent(*space.field, gens))
        throw NotIndependent("generators are linearly dependent");
    return Stabilizer{space.field, space.n, std::move(gens)};
}

inline Stabilizer validate(std::vector<PauliVec> gens) {
    if (gens.empty()) throw DimensionMismatch("cannot infer the Pauli space from no generators");
    PauliSpace space{gens[0].field_ptr(), gens[0].n()};
    return validate(space, std::move(gens));
}

// One Pauli sigma with symp(sigma, g_i) = b_i for all i: solve the linear
// system x . phi_G(g_j) = b_j (free variables zero, fixed column order) and
// split x into X exponents x_(n+1..2n) and Z exponents -x_(1..n).
inline PauliVec solve_commutation(const PauliSpace& space, std::span<const PauliVec> gens,
                                  const linalg::Vec& b) {
    if (b.size() != gens.size()) throw DimensionMismatch("one constraint value per generator");
    const Field& F = *space.field;
    if (!detail::independent(F, gens)) throw NotIndependent("constraint generators are dependent");
    auto sol = linalg::solve(F, detail::phi_g_rows(gens), b);
    if (!sol) throw NotIndependent("inconsistent system despite independent generators");
    linalg::Vec x(space.n), z(space.n);
    for (std::size_t i = 0; i < space.n; ++i) {
        x[i] = (*sol)[space.n + i];
        z[i] = F.neg((*sol)[i]);
    }
    return PauliVec(space.field, std::move(x), std::move(z));
}

// Exhaustive Omega_{gens, b} = {y : symp(y, g_i) = b_i for all i};
// |Omega| = q^(2n - ell) for independent gens.
inline std::vector<PauliVec> omega_enumerate(const PauliSpace& space,
                                             std::span<const PauliVec> gens,
                                             const linalg::Vec& b) {
    if (b.size() != gens.size()) throw DimensionMismatch("one constraint value per generator");
    std::uint64_t total = space.size();
    if (total == 0 || total > (1ull << 24)) throw TooLarge("Pauli space exceeds the exhaustive guard");
    if (!detail::independent(*space.field, gens))
        throw NotIndependent("constraint generators are dependent");
    std::vector<PauliVec> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        PauliVec y = pauli_at(space, idx);
        bool ok = true;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (symp(y, gens[i]) != b[i]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::move(y));
    }
    return out;
}

// Uniform sample from Omega_{gens, b}: a particular solution plus a uniform
// combination of a nullspace basis of the homogeneous system.
inline PauliVec omega_sample(const PauliSpace& space, std::span<const PauliVec> gens,
                             const linalg::Vec& b, RngStream& rng) {
    const Field& F = *space.field;
    if (gens.empty()) {
        linalg::Vec v(2 * space.n);
        for (auto& e : v) e = static_cast<std::uint32_t>(rng.below(F.order()));
        return phi_g_inv(space, v);
    }
    PauliVec particular = solve_commutation(space, gens, b);
    auto basis = linalg::nullspace(F, detail::constraint_matrix(space, gens));
    linalg::Vec v = phi_g(particular);
    for (const auto& dir : basis) {
        std::uint32_t c = static_cast<std::uint32_t>(rng.below(F.order()));
        if (c == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.add(v[j], F.mul(c, dir[j]));
    }
    return phi_g_inv(space, v);
}

inline bool in_normalizer(const Stabilizer& s, const PauliVec& sigma) {
    for (const auto& g : s.gens)
        if (symp(sigma, g) != 0) return false;
    return true;
}

// Uniform random stabilizer of size q^ell: g_1 uniform over nontrivial
// Paulis, g_(i+1) uniform over the commutant of the prefix minus its span
// (rejection sampling; every stabilizer has equally many ordered generating
// tuples, so the group distribution is uniform).
inline Stabilizer sample_stabilizer(const PauliSpace& space, std::size_t ell, RngStream& rng) {
    if (ell > space.n) throw InvalidDimension("stabilizer dimension exceeds n");
    const Field& F = *space.field;
    std::vector<PauliVec> gens;
    linalg::EchelonBasis span(space.field, 2 * space.n);
    linalg::Vec b;
    while (gens.size() < ell) {
        PauliVec cand = omega_sample(space, gens, b, rng);
        if (cand.trivial() || span.contains(phi_g(cand))) continue;
        span.insert(phi_g(cand));
        gens.push_back(std::move(cand));
        b.push_back(0);
    }
    return Stabilizer{space.field, space.n, std::move(gens)};
}

// A stabilizer code: stabilizer of size q^(n-k) plus logical pairs with
// canonical commutation symp(X_i, Z_j) = delta_ij; the n+k generators and
// logicals are jointly independent.
struct StabilizerCode {
    Stabilizer stab;
    std::vector<PauliVec> logical_x, logical_z;

    std::size_t n() const { return stab.n; }
    std::size_t k() const { return logical_x.size(); }
    const FieldPtr& field_ptr() const { return stab.field; }
    PauliSpace space() const { return stab.space(); }
};

inline StabilizerCode make_stabilizer_code(Stabilizer stab, std::vector<PauliVec> logical_x,
                                           std::vector<PauliVec> logical_z) {
    if (logical_x.size() != logical_z.size())
        throw DimensionMismatch("logical X/Z lists differ in length");
    std::size_t k = logical_x.size();
    if (stab.ell() + k != stab.n) throw InvalidDimension("need ell + k = n");
    const Field& F = *stab.field;
    auto check_member = [&](const PauliVec& v) {
        v.field().require_same(F);
        if (v.n() != stab.n) throw DimensionMismatch("logical has wrong n");
    };
    for (const auto& v : logical_x) check_member(v);
    for (const auto& v : logical_z) check_member(v);
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& g : stab.gens)
            if (symp(logical_x[i], g) != 0 || symp(logical_z[i], g) != 0)
                throw NotCommuting(i, stab.ell());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (symp(logical_x[i], logical_x[j]) != 0) throw NotCommuting(i, j);
            if (symp(logical_z[i], logical_z[j]) != 0) throw NotCommuting(i, j);
            std::uint32_t want = (i == j) ? 1u : 0u;
            if (symp(logical_x[i], logical_z[j]) != want)
                throw NotCommuting(i, j);
        }
    std::vector<PauliVec> all(stab.gens);
    all.insert(all.end(), logical_x.begin(), logical_x.end());
    all.insert(all.end(), logical_z.begin(), logical_z.end());
    if (!detail::independent(F, all))
        throw NotIndependent("stabilizer and logicals are jointly dependent");
    return StabilizerCode{std::move(stab), std::move(logical_x), std::move(logical_z)};
}

// Uniform random [[n, k]]_q stabilizer code: uniform stabilizer, then
// logicals drawn sequentially, each uniform over the affine space cut out by
// its commutation constraints, rejecting span-dependent draws. For k = n the
// result is a uniform random symplectic basis.
inline StabilizerCode sample_code(const PauliSpace& space, std::size_t k, RngStream& rng) {
    if (k > space.n) throw InvalidDimension("k exceeds n");
    Stabilizer stab = sample_stabilizer(space, space.n - k, rng);

    std::vector<PauliVec> chosen(stab.gens);
    linalg::EchelonBasis span(space.field, 2 * space.n);
    for (const auto& g : stab.gens) span.insert(phi_g(g));

    std::vector<PauliVec> logical_z;
    while (logical_z.size() < k) {
        linalg::Vec b(chosen.size(), 0);
        PauliVec cand = omega_sample(space, chosen, b, rng);
        if (cand.trivial() || span.contains(phi_g(cand))) continue;
        span.insert(phi_g(cand));
        chosen.push_back(cand);
        logical_z.push_back(std::move(cand));
    }
    std::vector<PauliVec> logical_x;
    while (logical_x.size() < k) {
        std::size_t i = logical_x.size();
        // b entries follow `chosen`: stab gens, then Z's (delta_i), then prior X's.
        linalg::Vec b(chosen.size(), 0);
        b[stab.ell() + i] = 1;
        PauliVec cand = omega_sample(space, chosen, b, rng);
        if (span.contains(phi_g(cand))) continue;  // cannot happen; kept as a guard
        span.insert(phi_g(cand));
        chosen.push_back(cand);
        logical_x.push_back(std::move(cand));
    }
    return make_stabilizer_code(std::move(stab), std::move(logical_x), std::move(logical_z));
}

// Coset label of sigma in N(S): c = (x_1..x_k, z_1..z_k) with
// x_j = symp(sigma, Z_j) and z_j = symp(X_j, sigma); c = 0 iff sigma in S.
inline linalg::Vec coset_label(const StabilizerCode& code, const PauliVec& sigma) {
    if (!in_normalizer(code.stab, sigma))
        throw NotInNormalizer("Pauli is outside the normalizer");
    std::size_t k = code.k();
    linalg::Vec c(2 * k);
    for (std::size_t j = 0; j < k; ++j) {
        c[j] = symp(sigma, code.logical_z[j]);
        c[k + j] = symp(code.logical_x[j], sigma);
    }
    return c;
}

// Canonical representative of S_c: the star-combination of logicals with
// exponents c and trivial stabilizer part.
inline PauliVec coset_rep(const StabilizerCode& code, const linalg::Vec& c) {
    std::size_t k = code.k();
    if (c.size() != 2 * k) throw DimensionMismatch("coset label has wrong length");
    const Field& F = *code.field_ptr();
    linalg::Vec v(2 * code.n(), 0);
    auto accumulate = [&](std::uint32_t coeff, const PauliVec& l) {
        if (coeff == 0) return;
        auto lv = phi_g(l);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.add(v[j], F.mul(coeff, lv[j]));
    };
    for (std::size_t j = 0; j < k; ++j) accumulate(c[j], code.logical_x[j]);
    for (std::size_t j = 0; j < k; ++j) accumulate(c[k + j], code.logical_z[j]);
    return phi_g_inv(code.space(), v);
}

// ---- serialization ----

inline void to_json(nlohmann::json& j, const StabilizerCode& code) {
    nlohmann::json gens = nlohmann::json::array(), lx = nlohmann::json::array(),
                   lz = nlohmann::json::array();
    for (const auto& g : code.stab.gens) gens.push_back(g);
    for (const auto& l : code.logical_x) lx.push_back(l);
    for (const auto& l : code.logical_z) lz.push_back(l);
    j = nlohmann::json{{"n", code.n()},          {"k", code.k()},
                       {"q", code.field_ptr()->order()}, {"stab_gens", gens},
                       {"logical_x", lx},        {"logical_z", lz}};
}

// Factor a prime power q = p^m; fields are canonical per order.
inline std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q) {
    if (q < 2) throw DomainError("q must be at least 2");
    std::uint32_t p = q;
    for (std::uint32_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint32_t m = 0, v = q;
    while (v % p == 0) {
        v /= p;
        ++m;
    }
    if (v != 1) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
    return {p, m};
}

inline FieldPtr field_of_order(std::uint32_t q) {
    auto [p, m] = factor_prime_power(q);
    return Field::make(p, m);
}

inline StabilizerCode code_from_json(const nlohmann::json& j) {
    auto field = field_of_order(j.at("q").get<std::uint32_t>());
    PauliSpace space{field, j.at("n").get<std::size_t>()};
    auto read_list = [&](const nlohmann::json& arr) {
        std::vector<PauliVec> out;
        for (const auto& e : arr) out.push_back(pauli_from_json(space, e));
        return out;
    };
    Stabilizer stab = validate(space, read_list(j.at("stab_gens")));
    return make_stabilizer_code(std::move(stab), read_list(j.at("logical_x")),
                                read_list(j.at("logical_z")));
}

}  // namespace stabforge
