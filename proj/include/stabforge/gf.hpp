#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stabforge/errors.hpp"

namespace stabforge {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

// Base-p digit codecs; element index i <-> coefficient vector (i's digits,
// constant term first).
inline std::vector<std::uint32_t> digits(std::uint64_t idx, std::uint32_t p, std::uint32_t m) {
    std::vector<std::uint32_t> d(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        d[i] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
    }
    return d;
}

inline std::uint32_t undigits(std::span<const std::uint32_t> d, std::uint32_t p) {
    std::uint64_t idx = 0;
    for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
    return static_cast<std::uint32_t>(idx);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    b %= mod;
    while (e) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return r;
}

inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

}  // namespace detail

// Exact arithmetic in GF(p^m).
//
// Elements are indices in [0, p^m); the base-p digits of an index are the
// coefficients of the representative polynomial, constant term first. The
// modulus is the lexicographically least monic irreducible polynomial of
// degree m over Z_p (coefficient lists compared low-degree-first), so two
// constructions of the same (p, m) agree element for element. Construction
// goes through Field::make, which hands out one canonical instance per
// (p, m); fields are immutable afterwards and safe to share across threads.
class Field : public std::enable_shared_from_this<Field> {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    static FieldPtr make(std::uint32_t p, std::uint32_t m);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    // Length m+1, low-degree first, monic.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same(const Field& other) const {
        return this == &other || (p_ == other.p_ && m_ == other.m_);
    }
    void require_same(const Field& other) const {
        if (!same(other))
            throw FieldMismatch("elements of GF(" + std::to_string(q_) + ") mixed with GF(" +
                                std::to_string(other.q_) + ")");
    }

    // ---- index arithmetic ----

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (!addtab_.empty()) return addtab_[static_cast<std::size_t>(a) * q_ + b];
        return add_digits(a, b);
    }
    std::uint32_t neg(std::uint32_t a) const { return negtab_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, negtab_[b]); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
        return exp_[(q_ - 1) - log_[a]];
    }
    std::uint32_t pow(std::uint32_t a, std::int64_t e) const {
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            throw DivisionByZero("negative power of zero");
        }
        std::int64_t ord = q_ - 1;
        std::int64_t r = ((e % ord) + ord) % ord;
        return exp_[static_cast<std::size_t>(static_cast<std::uint64_t>(log_[a]) * r % ord)];
    }

    std::vector<std::uint32_t> coeffs(std::uint32_t a) const { return detail::digits(a, p_, m_); }
    std::uint32_t from_coeffs(std::span<const std::uint32_t> c) const {
        if (c.size() != m_) throw DimensionMismatch("coefficient vector has wrong length");
        for (auto v : c)
            if (v >= p_) throw DomainError("coefficient not reduced mod p");
        return detail::undigits(c, p_);
    }

    std::string elem_str(std::uint32_t a) const { return std::to_string(a); }

    // Frobenius-pair machinery for fields of even degree; see QuadraticExtension.
    const class QuadraticExtension& quad() const;

private:
    Field(std::uint32_t p, std::uint32_t m);
    friend class QuadraticExtension;

    std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t out = 0, mult = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            out += (a % p_ + b % p_) % p_ * mult;
            a /= p_;
            b /= p_;
            mult *= p_;
        }
        return out;
    }

    // Polynomial helpers on digit vectors, used only during construction.
    std::vector<std::uint32_t> mulmod_slow(std::span<const std::uint32_t> a,
                                           std::span<const std::uint32_t> b) const;
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const;
    static bool divides(std::uint32_t p, std::span<const std::uint32_t> divisor,
                        std::span<const std::uint32_t> poly);
    static bool irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);
    static std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t m);

    std::uint32_t p_, m_, q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;     // size 2(q-1), doubled to skip the mod
    std::vector<std::uint32_t> log_;     // size q, log_[0] unused
    std::vector<std::uint32_t> negtab_;  // size q
    std::vector<std::uint32_t> addtab_;  // q*q when q <= 256 and p odd

    mutable std::mutex quad_mu_;
    mutable std::shared_ptr<const class QuadraticExtension> quad_;
};

inline std::vector<std::uint32_t> Field::mulmod_slow(std::span<const std::uint32_t> a,
                                                     std::span<const std::uint32_t> b) const {
    std::vector<std::uint32_t> r(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j)
            r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_;
    for (std::size_t i = r.size(); i-- > m_;) {
        std::uint32_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::uint32_t j = 0; j < m_; ++j)
            r[i - m_ + j] = (r[i - m_ + j] + static_cast<std::uint64_t>(c) * (p_ - modulus_[j])) % p_;
    }
    r.resize(m_);
    return r;
}

inline std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
    auto r = mulmod_slow(detail::digits(a, p_, m_), detail::digits(b, p_, m_));
    return detail::undigits(r, p_);
}

inline std::uint32_t Field::pow_slow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        e >>= 1;
    }
    return r;
}

inline bool Field::divides(std::uint32_t p, std::span<const std::uint32_t> divisor,
                           std::span<const std::uint32_t> poly) {
    // Remainder of poly by a monic divisor, both low-degree-first.
    std::vector<std::uint32_t> r(poly.begin(), poly.end());
    std::size_t db = divisor.size() - 1;
    for (std::size_t i = r.size(); i-- > db;) {
        std::uint32_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < db; ++j)
            r[i - db + j] = (r[i - db + j] + static_cast<std::uint64_t>(c) * (p - divisor[j])) % p;
    }
    for (std::size_t j = 0; j < db; ++j)
        if (r[j]) return false;
    return true;
}

inline bool Field::irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
    // Exhaustive trial division by monic polynomials of degree <= m/2.
    std::uint32_t m = static_cast<std::uint32_t>(poly.size()) - 1;
    for (std::uint32_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            auto div = detail::digits(t, p, d);
            div.push_back(1);
            if (divides(p, div, poly)) return false;
        }
    }
    return true;
}

inline std::vector<std::uint32_t> Field::least_irreducible(std::uint32_t p, std::uint32_t m) {
    if (m == 1) return {0, 1};
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
        // digits(t) enumerates coefficient tuples in lexicographic order,
        // low-degree coefficient most significant.
        std::vector<std::uint32_t> cand(m);
        std::uint64_t v = t;
        for (std::uint32_t i = m; i-- > 0;) {
            cand[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        std::vector<std::uint32_t> poly(cand);
        poly.push_back(1);
        if (irreducible(p, poly)) return poly;
    }
    throw NoBasisFound("no irreducible polynomial found");  // unreachable
}

inline Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw DegreeOutOfRange("field order exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = least_irreducible(p, m);

    negtab_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        auto d = detail::digits(a, p_, m_);
        for (auto& v : d) v = (p_ - v) % p_;
        negtab_[a] = detail::undigits(d, p_);
    }
    if (p_ != 2 && q_ <= 256) {
        addtab_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b)
                addtab_[static_cast<std::size_t>(a) * q_ + b] = add_digits(a, b);
    }

    // exp/log tables from the first primitive element in enumeration order
    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 1);
    if (q_ > 2) {
        std::uint32_t ord = q_ - 1;
        std::vector<std::uint32_t> prime_factors;
        {
            std::uint32_t v = ord;
            for (std::uint32_t d = 2; d * d <= v; ++d)
                if (v % d == 0) {
                    prime_factors.push_back(d);
                    while (v % d == 0) v /= d;
                }
            if (v > 1) prime_factors.push_back(v);
        }
        std::uint32_t gen = 0;
        for (std::uint32_t g = 2; g < q_; ++g) {
            bool primitive = true;
            for (auto r : prime_factors)
                if (pow_slow(g, ord / r) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                gen = g;
                break;
            }
        }
        if (gen == 0) throw NoBasisFound("no primitive element found");  // unreachable
        std::uint32_t acc = 1;
        for (std::uint32_t i = 0; i < ord; ++i) {
            exp_[i] = acc;
            exp_[i + ord] = acc;
            log_[acc] = i;
            acc = mul_slow(acc, gen);
        }
    }
}

inline FieldPtr Field::make(std::uint32_t p, std::uint32_t m) {
    if (!detail::is_prime(p)) throw NonPrimeCharacteristic("p = " + std::to_string(p) + " is not prime");
    if (m < 1 || m > 16) throw DegreeOutOfRange("extension degree must be in [1, 16]");

    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::weak_ptr<const Field>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, m);
    if (auto it = registry.find(key); it != registry.end())
        if (auto f = it->second.lock()) return f;
    FieldPtr f(new Field(p, m));
    registry[key] = f;
    return f;
}

// An element bound to its field; checked, operator-driven arithmetic for
// code that is not on a hot path.
class FieldElem {
public:
    FieldElem(FieldPtr f, std::uint32_t idx) : f_(std::move(f)), idx_(idx) {
        if (idx_ >= f_->order()) throw DomainError("element index out of range");
    }

    std::uint32_t index() const { return idx_; }
    const Field& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }
    bool is_zero() const { return idx_ == 0; }
    std::vector<std::uint32_t> coeffs() const { return f_->coeffs(idx_); }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        a.f_->require_same(*b.f_);
        return {a.f_, a.f_->add(a.idx_, b.idx_)};
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        a.f_->require_same(*b.f_);
        return {a.f_, a.f_->sub(a.idx_, b.idx_)};
    }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        a.f_->require_same(*b.f_);
        return {a.f_, a.f_->mul(a.idx_, b.idx_)};
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
        a.f_->require_same(*b.f_);
        return {a.f_, a.f_->mul(a.idx_, b.f_->inv(b.idx_))};
    }
    FieldElem inv() const { return {f_, f_->inv(idx_)}; }
    FieldElem pow(std::int64_t e) const { return {f_, f_->pow(idx_, e)}; }
    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.f_->same(*b.f_) && a.idx_ == b.idx_;
    }

private:
    FieldPtr f_;
    std::uint32_t idx_;
};

namespace detail {

// Gaussian inverse of a square matrix over Z_p (plain residues, no Field).
inline std::vector<std::vector<std::uint32_t>> invert_mod_p(
    std::vector<std::vector<std::uint32_t>> a, std::uint32_t p) {
    std::size_t n = a.size();
    std::vector<std::vector<std::uint32_t>> inv(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    auto inv_mod = [p](std::uint32_t v) {
        return static_cast<std::uint32_t>(powmod_u64(v, p - 2, p));
    };
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw NoBasisFound("singular basis-change matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        std::uint32_t f = inv_mod(a[col][col]);
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[col][j]) * f % p);
            inv[col][j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(inv[col][j]) * f % p);
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            std::uint32_t g = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] = static_cast<std::uint32_t>(
                    (a[row][j] + static_cast<std::uint64_t>(g) * (p - a[col][j])) % p);
                inv[row][j] = static_cast<std::uint32_t>(
                    (inv[row][j] + static_cast<std::uint64_t>(g) * (p - inv[col][j])) % p);
            }
        }
    }
    return inv;
}

}  // namespace detail

// GF(q^r) viewed as an r-dimensional vector space over the subfield GF(q),
// with the power basis {1, xbar, ..., xbar^(r-1)} of the canonical generator.
// coords/elem realize the identification GF(q^r) <-> GF(q)^r; both maps are
// GF(q)-linear and mutually inverse.
class SubfieldView {
public:
    SubfieldView(FieldPtr big, FieldPtr base) : big_(std::move(big)), base_(std::move(base)) {
        if (big_->characteristic() != base_->characteristic())
            throw FieldMismatch("subfield must share the characteristic");
        if (big_->degree() % base_->degree() != 0)
            throw FieldMismatch("base degree must divide extension degree");
        r_ = big_->degree() / base_->degree();

        // Embed GF(q) via the first root of its modulus in the big field.
        std::uint32_t root = big_->order();
        for (std::uint32_t z = 0; z < big_->order(); ++z) {
            std::uint32_t acc = 0;
            for (std::size_t j = base_->modulus().size(); j-- > 0;)
                acc = big_->add(big_->mul(acc, z), base_->modulus()[j]);
            if (acc == 0) {
                root = z;
                break;
            }
        }
        if (root == big_->order()) throw NoBasisFound("modulus has no root in extension");
        root_ = root;

        embed_tab_.resize(base_->order());
        std::uint32_t bm = base_->degree();
        std::vector<std::uint32_t> zpow(bm);
        zpow[0] = 1;
        for (std::uint32_t j = 1; j < bm; ++j) zpow[j] = big_->mul(zpow[j - 1], root_);
        for (std::uint32_t c = 0; c < base_->order(); ++c) {
            auto d = detail::digits(c, base_->characteristic(), bm);
            std::uint32_t acc = 0;
            for (std::uint32_t j = 0; j < bm; ++j) acc = big_->add(acc, big_->mul(d[j], zpow[j]));
            embed_tab_[c] = acc;
        }

        // Change of basis: column (i*bm + j) holds the Z_p digits of z^j * xbar^i.
        std::uint32_t M = big_->degree();
        std::uint32_t xbar = big_->characteristic() < big_->order()
                                 ? big_->characteristic()
                                 : 0;  // index p encodes the polynomial x
        xpow_.resize(r_);
        xpow_[0] = 1;
        for (std::uint32_t i = 1; i < r_; ++i) xpow_[i] = big_->mul(xpow_[i - 1], xbar);
        std::vector<std::vector<std::uint32_t>> T(M, std::vector<std::uint32_t>(M, 0));
        for (std::uint32_t i = 0; i < r_; ++i)
            for (std::uint32_t j = 0; j < bm; ++j) {
                std::uint32_t e = big_->mul(zpow[j], xpow_[i]);
                auto d = detail::digits(e, big_->characteristic(), M);
                for (std::uint32_t row = 0; row < M; ++row) T[row][i * bm + j] = d[row];
            }
        tinv_ = detail::invert_mod_p(std::move(T), big_->characteristic());
    }

    const Field& big() const { return *big_; }
    const Field& base() const { return *base_; }
    const FieldPtr& big_ptr() const { return big_; }
    const FieldPtr& base_ptr() const { return base_; }
    std::uint32_t r() const { return r_; }
    std::uint32_t root() const { return root_; }

    std::uint32_t embed(std::uint32_t base_elem) const { return embed_tab_[base_elem]; }

    std::vector<std::uint32_t> coords(std::uint32_t x) const {
        std::uint32_t p = big_->characteristic(), M = big_->degree(), bm = base_->degree();
        auto d = detail::digits(x, p, M);
        std::vector<std::uint32_t> c(M, 0);
        for (std::uint32_t row = 0; row < M; ++row) {
            std::uint64_t acc = 0;
            for (std::uint32_t j = 0; j < M; ++j) acc += static_cast<std::uint64_t>(tinv_[row][j]) * d[j];
            c[row] = static_cast<std::uint32_t>(acc % p);
        }
        std::vector<std::uint32_t> out(r_);
        for (std::uint32_t i = 0; i < r_; ++i)
            out[i] = detail::undigits(std::span(c).subspan(i * bm, bm), p);
        return out;
    }

    std::uint32_t elem(std::span<const std::uint32_t> coords) const {
        if (coords.size() != r_) throw DimensionMismatch("coordinate vector has wrong length");
        std::uint32_t acc = 0;
        for (std::uint32_t i = 0; i < r_; ++i)
            acc = big_->add(acc, big_->mul(embed_tab_[coords[i]], xpow_[i]));
        return acc;
    }

private:
    FieldPtr big_, base_;
    std::uint32_t r_ = 0, root_ = 0;
    std::vector<std::uint32_t> embed_tab_;
    std::vector<std::uint32_t> xpow_;
    std::vector<std::vector<std::uint32_t>> tinv_;
};

// The basis {beta, beta^q} of GF(q^2) over GF(q): beta is the first element
// in enumeration order whose Frobenius pair is linearly independent over the
// subfield. pair_to_elem / elem_to_pair convert between (a, b) in GF(q)^2 and
// a*beta + b*beta^q in GF(q^2).
class QuadraticExtension {
public:
    explicit QuadraticExtension(FieldPtr ext) : view_(ext, half_degree_base(*ext)) {
        const Field& E = view_.big();
        const Field& B = view_.base();
        std::uint32_t q = B.order();
        for (std::uint32_t beta = 0; beta < E.order(); ++beta) {
            std::uint32_t beta_q = E.pow(beta, q);
            auto bc = view_.coords(beta);
            auto cc = view_.coords(beta_q);
            std::uint32_t det = B.sub(B.mul(bc[0], cc[1]), B.mul(bc[1], cc[0]));
            if (det != 0) {
                beta_ = beta;
                beta_q_ = beta_q;
                std::uint32_t dinv = B.inv(det);
                // inverse of [[bc0, cc0], [bc1, cc1]]
                minv_[0][0] = B.mul(cc[1], dinv);
                minv_[0][1] = B.mul(B.neg(cc[0]), dinv);
                minv_[1][0] = B.mul(B.neg(bc[1]), dinv);
                minv_[1][1] = B.mul(bc[0], dinv);
                return;
            }
        }
        throw NoBasisFound("no frobenius basis found");  // unreachable for valid fields
    }

    const Field& ext() const { return view_.big(); }
    const Field& base() const { return view_.base(); }
    const FieldPtr& ext_ptr() const { return view_.big_ptr(); }
    const FieldPtr& base_ptr() const { return view_.base_ptr(); }
    std::uint32_t beta() const { return beta_; }
    std::uint32_t beta_q() const { return beta_q_; }
    std::uint32_t embed(std::uint32_t base_elem) const { return view_.embed(base_elem); }

    std::uint32_t pair_to_elem(std::uint32_t a, std::uint32_t b) const {
        const Field& E = view_.big();
        return E.add(E.mul(view_.embed(a), beta_), E.mul(view_.embed(b), beta_q_));
    }
    std::pair<std::uint32_t, std::uint32_t> elem_to_pair(std::uint32_t u) const {
        const Field& B = view_.base();
        auto c = view_.coords(u);
        std::uint32_t a = B.add(B.mul(minv_[0][0], c[0]), B.mul(minv_[0][1], c[1]));
        std::uint32_t b = B.add(B.mul(minv_[1][0], c[0]), B.mul(minv_[1][1], c[1]));
        return {a, b};
    }

private:
    static FieldPtr half_degree_base(const Field& ext) {
        if (ext.degree() % 2 != 0)
            throw DegreeOutOfRange("frobenius basis requires an even-degree extension");
        return Field::make(ext.characteristic(), ext.degree() / 2);
    }

    SubfieldView view_;
    std::uint32_t beta_ = 0, beta_q_ = 0;
    std::uint32_t minv_[2][2] = {{0, 0}, {0, 0}};
};

inline const QuadraticExtension& Field::quad() const {
    std::lock_guard<std::mutex> lock(quad_mu_);
    if (!quad_) {
        if (m_ % 2 != 0) throw DegreeOutOfRange("frobenius basis requires an even-degree extension");
        quad_ = std::make_shared<const QuadraticExtension>(shared_from_this());
    }
    return *quad_;
}

// ---- spec-level convenience wrappers ----

inline FieldPtr make_field(std::uint32_t p, std::uint32_t m) { return Field::make(p, m); }

inline std::pair<FieldElem, FieldElem> frobenius_basis(const FieldPtr& ext) {
    const auto& qx = ext->quad();
    return {FieldElem(ext, qx.beta()), FieldElem(ext, qx.beta_q())};
}

inline std::vector<std::uint32_t> tower_coords(const SubfieldView& view, std::uint32_t x) {
    return view.coords(x);
}
inline std::uint32_t tower_elem(const SubfieldView& view, std::span<const std::uint32_t> c) {
    return view.elem(c);
}

// Replayable field descriptor: {"p": int, "m": int, "modulus": [int, ...]}.
inline void to_json(nlohmann::json& j, const Field& f) {
    j = nlohmann::json{{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}};
}

inline FieldPtr field_from_json(const nlohmann::json& j) {
    auto f = Field::make(j.at("p").get<std::uint32_t>(), j.at("m").get<std::uint32_t>());
    if (j.contains("modulus") && j.at("modulus").get<std::vector<std::uint32_t>>() != f->modulus())
        throw FieldMismatch("field descriptor modulus does not match canonical construction");
    return f;
}

}  // namespace stabforge
