#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabforge/errors.hpp"
#include "stabforge/gf.hpp"
#include "stabforge/linalg.hpp"

namespace stabforge {

// A Pauli on n q-ary subsystems, modulo phase: the exponent pair
// (x-part, z-part) in GF(q)^n for X^{x_i} Z^{z_i} per coordinate. The
// all-zero vector is the trivial Pauli. Values are immutable; all
// operations below are pure.
class PauliVec {
public:
    PauliVec(FieldPtr f, std::size_t n)
        : f_(std::move(f)), x_(n, 0), z_(n, 0) {}
    PauliVec(FieldPtr f, linalg::Vec x, linalg::Vec z)
        : f_(std::move(f)), x_(std::move(x)), z_(std::move(z)) {
        if (x_.size() != z_.size()) throw DimensionMismatch("x/z parts differ in length");
        for (auto v : x_)
            if (v >= f_->order()) throw DomainError("x exponent out of range");
        for (auto v : z_)
            if (v >= f_->order()) throw DomainError("z exponent out of range");
    }

    std::size_t n() const { return x_.size(); }
    const Field& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }
    std::uint32_t x(std::size_t i) const { return x_[i]; }
    std::uint32_t z(std::size_t i) const { return z_[i]; }
    const linalg::Vec& x_part() const { return x_; }
    const linalg::Vec& z_part() const { return z_; }

    bool trivial() const {
        for (std::size_t i = 0; i < n(); ++i)
            if (x_[i] || z_[i]) return false;
        return true;
    }

    friend bool operator==(const PauliVec& a, const PauliVec& b) {
        return a.f_->same(*b.f_) && a.x_ == b.x_ && a.z_ == b.z_;
    }

private:
    FieldPtr f_;
    linalg::Vec x_, z_;
};

// The (field, n) context a Pauli lives in; threads the data that empty
// generator lists cannot supply.
struct PauliSpace {
    FieldPtr field;
    std::size_t n;

    std::uint32_t q() const { return field->order(); }
    // |P_n| = q^(2n), or 0 on overflow past 2^63.
    std::uint64_t size() const {
        std::uint64_t s = 1;
        for (std::size_t i = 0; i < 2 * n; ++i) {
            if (s > (1ull << 63) / field->order()) return 0;
            s *= field->order();
        }
        return s;
    }
    PauliVec identity() const { return PauliVec(field, n); }
};

inline void require_compatible(const PauliVec& a, const PauliVec& b) {
    a.field().require_same(b.field());
    if (a.n() != b.n()) throw DimensionMismatch("Pauli vectors act on different n");
}

// Group operation: product modulo phase, i.e. coordinatewise exponent sums.
inline PauliVec star(const PauliVec& a, const PauliVec& b) {
    require_compatible(a, b);
    const Field& F = a.field();
    linalg::Vec x(a.n()), z(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) {
        x[i] = F.add(a.x(i), b.x(i));
        z[i] = F.add(a.z(i), b.z(i));
    }
    return PauliVec(a.field_ptr(), std::move(x), std::move(z));
}

// Commutation form: symp(a, b) = a_x . b_z - a_z . b_x over GF(q).
// Zero exactly when the underlying operators commute; symp(X, Z) = 1.
inline std::uint32_t symp(const PauliVec& a, const PauliVec& b) {
    require_compatible(a, b);
    const Field& F = a.field();
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < a.n(); ++i) {
        acc = F.add(acc, F.mul(a.x(i), b.z(i)));
        acc = F.sub(acc, F.mul(a.z(i), b.x(i)));
    }
    return acc;
}

// Number of coordinates with (x_i, z_i) != (0, 0).
inline std::size_t weight(const PauliVec& a) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < a.n(); ++i)
        if (a.x(i) || a.z(i)) ++w;
    return w;
}

// phi_G: (x-part, z-part) concatenated into GF(q)^(2n); star maps to +.
inline linalg::Vec phi_g(const PauliVec& a) {
    linalg::Vec v(2 * a.n());
    for (std::size_t i = 0; i < a.n(); ++i) {
        v[i] = a.x(i);
        v[a.n() + i] = a.z(i);
    }
    return v;
}

inline PauliVec phi_g_inv(const PauliSpace& space, std::span<const std::uint32_t> v) {
    if (v.size() != 2 * space.n) throw DimensionMismatch("phi_G vector has wrong length");
    linalg::Vec x(v.begin(), v.begin() + space.n), z(v.begin() + space.n, v.end());
    return PauliVec(space.field, std::move(x), std::move(z));
}

// Enumeration: Paulis in P_n indexed 0 .. q^(2n)-1, phi_G vector read as a
// base-q integer (first coordinate least significant).
inline PauliVec pauli_at(const PauliSpace& space, std::uint64_t index) {
    auto d = detail::digits(index, space.q(), static_cast<std::uint32_t>(2 * space.n));
    return phi_g_inv(space, d);
}

inline std::uint64_t pauli_index(const PauliVec& a) {
    auto v = phi_g(a);
    std::uint64_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = idx * a.field().order() + v[i];
    return idx;
}

// phi: coordinate i maps to x_i*beta + z_i*beta^q in GF(q^2); a group
// isomorphism onto (GF(q^2)^n, +) that preserves weight.
class PhiMap {
public:
    explicit PhiMap(FieldPtr q_field)
        : base_(std::move(q_field)),
          ext_(Field::make(base_->characteristic(), 2 * base_->degree())),
          quad_(&ext_->quad()) {}

    const FieldPtr& base_field() const { return base_; }
    const FieldPtr& ext_field() const { return ext_; }
    const QuadraticExtension& quad() const { return *quad_; }

    std::uint32_t phi1(std::uint32_t a, std::uint32_t b) const { return quad_->pair_to_elem(a, b); }
    std::pair<std::uint32_t, std::uint32_t> phi1_inv(std::uint32_t u) const {
        return quad_->elem_to_pair(u);
    }

    std::vector<std::uint32_t> operator()(const PauliVec& a) const {
        a.field().require_same(*base_);
        std::vector<std::uint32_t> out(a.n());
        for (std::size_t i = 0; i < a.n(); ++i) out[i] = phi1(a.x(i), a.z(i));
        return out;
    }

    PauliVec inverse(std::span<const std::uint32_t> img) const {
        linalg::Vec x(img.size()), z(img.size());
        for (std::size_t i = 0; i < img.size(); ++i) {
            auto [a, b] = phi1_inv(img[i]);
            x[i] = a;
            z[i] = b;
        }
        return PauliVec(base_, std::move(x), std::move(z));
    }

private:
    FieldPtr base_, ext_;
    const QuadraticExtension* quad_;  // owned by ext_
};

// Textual rendering X{a}Z{b}|... per coordinate.
inline std::string to_string(const PauliVec& a) {
    std::string s;
    for (std::size_t i = 0; i < a.n(); ++i) {
        if (i) s += '|';
        s += "X" + a.field().elem_str(a.x(i)) + "Z" + a.field().elem_str(a.z(i));
    }
    return s;
}

inline void to_json(nlohmann::json& j, const PauliVec& a) {
    j = nlohmann::json{{"n", a.n()}, {"x", a.x_part()}, {"z", a.z_part()}};
}

inline PauliVec pauli_from_json(const PauliSpace& space, const nlohmann::json& j) {
    auto x = j.at("x").get<linalg::Vec>();
    auto z = j.at("z").get<linalg::Vec>();
    if (x.size() != space.n) throw DimensionMismatch("Pauli JSON has wrong n");
    return PauliVec(space.field, std::move(x), std::move(z));
}

}  // namespace stabforge
