// Copyright 2026 The agqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "agqc/gf.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace agqc {

namespace {

using Poly = std::vector<std::uint64_t>;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic-or-not f over F_p.
Poly poly_mod(Poly a, const Poly &f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = mod_inv(f.back(), p);
    while (a.size() >= f.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly &a, const Poly &b, const Poly &f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly &f, std::uint64_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin's test for a monic polynomial of degree k >= 1.
bool is_irreducible(const Poly &f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    if (f[0] == 0) return false;
    // xp[j] = x^(p^j) mod f
    std::vector<Poly> xp(k + 1);
    xp[0] = poly_mod(Poly{0, 1}, f, p);
    for (std::size_t j = 1; j <= k; ++j) xp[j] = poly_powmod(xp[j - 1], p, f, p);
    Poly diff = xp[k];
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (std::uint64_t r : prime_factors(k)) {
        Poly h = xp[k / r];
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        Poly g = poly_gcd(f, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

constexpr std::uint32_t kLogTableLimit = 1u << 20;
constexpr std::uint32_t kAddTableLimit = 1024;

}  // namespace

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t order = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> pow_p;  // p^i, i < k

    std::uint32_t primitive = 1;
    bool has_log = false;
    std::vector<std::uint32_t> exp;  // length 2 (order - 1)
    std::vector<std::uint32_t> log;  // log[0] unused
    bool has_add = false;
    std::vector<std::uint16_t> add;
    std::vector<std::uint32_t> neg;

    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
        if (k == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + b) % p);
        if (p == 2) return a ^ b;
        std::uint32_t r = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
            const std::uint32_t d = (a % p + b % p) % p;
            r += d * pow_p[i];
            a /= p;
            b /= p;
        }
        return r;
    }

    std::uint32_t neg_slow(std::uint32_t a) const {
        if (k == 1) return a == 0 ? 0 : p - a;
        std::uint32_t r = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
            const std::uint32_t d = a % p;
            r += (d == 0 ? 0 : p - d) * pow_p[i];
            a /= p;
        }
        return r;
    }

    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        if (k == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
        Poly pa(k), pb(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            pa[i] = a % p;
            pb[i] = b % p;
            a /= p;
            b /= p;
        }
        Poly f(modulus.begin(), modulus.end());
        trim(pa);
        trim(pb);
        Poly r = poly_mulmod(pa, pb, f, p);
        std::uint32_t out = 0;
        for (std::size_t i = 0; i < r.size(); ++i) out += static_cast<std::uint32_t>(r[i]) * pow_p[i];
        return out;
    }

    std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    }
};

}  // namespace detail

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
    require(q >= 2, "not a prime power: " + std::to_string(q));
    auto factors = prime_factors(q);
    require(factors.size() == 1, "not a prime power: " + std::to_string(q));
    std::uint32_t r = 0;
    std::uint64_t v = q;
    while (v > 1) {
        v /= factors[0];
        ++r;
    }
    return {static_cast<std::uint32_t>(factors[0]), r};
}

namespace {

std::shared_ptr<const detail::FieldData> build_field(std::uint32_t p, std::uint32_t k) {
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->k = k;
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        d->pow_p.push_back(static_cast<std::uint32_t>(order));
        order *= p;
    }
    d->order = static_cast<std::uint32_t>(order);

    // Lexicographically first monic irreducible, c_0 most significant.
    Poly f(k + 1, 0);
    f[k] = 1;
    bool found = false;
    while (true) {
        if (is_irreducible(f, p)) {
            found = true;
            break;
        }
        // Increment c_{k-1} fastest, carrying toward c_0.
        std::int64_t i = static_cast<std::int64_t>(k) - 1;
        while (i >= 0) {
            if (++f[i] < p) break;
            f[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    ensure(found, "no irreducible polynomial found");
    d->modulus.assign(f.begin(), f.end());

    const std::uint32_t n1 = d->order - 1;
    if (d->order == 2) {
        d->primitive = 1;
    } else {
        const auto pf = prime_factors(n1);
        for (std::uint32_t g = 1; g < d->order; ++g) {
            bool ok = true;
            for (std::uint64_t r : pf) {
                if (d->pow_slow(g, n1 / r) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                d->primitive = g;
                break;
            }
        }
    }

    if (d->order <= kLogTableLimit) {
        d->has_log = true;
        d->exp.resize(2 * static_cast<std::size_t>(n1) + 2);
        d->log.assign(d->order, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < n1; ++i) {
            d->exp[i] = x;
            d->log[x] = i;
            x = d->mul_slow(x, d->primitive);
        }
        ensure(x == 1, "multiplicative group order check failed");
        for (std::uint32_t i = n1; i < d->exp.size(); ++i) d->exp[i] = d->exp[i - n1];
    }
    if (d->order <= kAddTableLimit) {
        d->has_add = true;
        d->add.resize(static_cast<std::size_t>(d->order) * d->order);
        for (std::uint32_t a = 0; a < d->order; ++a) {
            for (std::uint32_t b = 0; b < d->order; ++b) {
                d->add[static_cast<std::size_t>(a) * d->order + b] =
                    static_cast<std::uint16_t>(d->add_slow(a, b));
            }
        }
        d->neg.resize(d->order);
        for (std::uint32_t a = 0; a < d->order; ++a) d->neg[a] = d->neg_slow(a);
    }
    return d;
}

}  // namespace

Field Field::make(std::uint64_t p, std::uint32_t k) {
    require(k >= 1, "extension degree must be positive");
    require(is_prime(p), "not prime: " + std::to_string(p));
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        order *= p;
        require(order < (1ull << 32), "field too large: " + std::to_string(p) + "^" + std::to_string(k));
    }
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<std::uint32_t>(p), k);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, build_field(static_cast<std::uint32_t>(p), k)).first;
    }
    return Field(it->second);
}

std::uint32_t Field::characteristic() const { return data_->p; }
std::uint32_t Field::degree() const { return data_->k; }
std::uint32_t Field::order() const { return data_->order; }
std::span<const std::uint32_t> Field::modulus() const { return data_->modulus; }

std::string Field::name() const { return "F_" + std::to_string(data_->order); }

bool Field::operator==(const Field &other) const {
    return data_ == other.data_ || (data_->p == other.data_->p && data_->k == other.data_->k);
}

Field::Raw Field::add(Raw a, Raw b) const {
    const auto &d = *data_;
    if (d.has_add) return d.add[static_cast<std::size_t>(a) * d.order + b];
    return d.add_slow(a, b);
}

Field::Raw Field::neg(Raw a) const {
    const auto &d = *data_;
    if (d.has_add) return d.neg[a];
    return d.neg_slow(a);
}

Field::Raw Field::sub(Raw a, Raw b) const { return add(a, neg(b)); }

Field::Raw Field::mul(Raw a, Raw b) const {
    if (a == 0 || b == 0) return 0;
    const auto &d = *data_;
    if (d.has_log) return d.exp[d.log[a] + d.log[b]];
    return d.mul_slow(a, b);
}

Field::Raw Field::inv(Raw a) const {
    require(a != 0, "division by zero");
    const auto &d = *data_;
    if (d.has_log) return d.exp[(d.order - 1 - d.log[a]) % (d.order - 1)];
    return d.pow_slow(a, static_cast<std::uint64_t>(d.order) - 2);
}

Field::Raw Field::div(Raw a, Raw b) const { return mul(a, inv(b)); }

Field::Raw Field::pow(Raw a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const auto &d = *data_;
    const std::uint64_t n1 = d.order - 1;
    if (d.has_log) return d.exp[static_cast<std::size_t>((static_cast<std::uint64_t>(d.log[a]) * (e % n1)) % n1)];
    return d.pow_slow(a, e % n1 == 0 ? n1 : e % n1);
}

Field::Raw Field::frobenius(Raw a, std::uint32_t i) const {
    const auto &d = *data_;
    i %= d.k;
    std::uint64_t e = 1;
    for (std::uint32_t j = 0; j < i; ++j) e *= d.p;
    return pow(a, e);
}

Field::Raw Field::trace(Raw a, std::uint32_t sub_degree) const {
    require(sub_degree >= 1 && data_->k % sub_degree == 0,
            "trace: " + std::to_string(sub_degree) + " does not divide " + std::to_string(data_->k));
    Raw acc = 0;
    Raw term = a;
    for (std::uint32_t j = 0; j < data_->k / sub_degree; ++j) {
        acc = add(acc, term);
        term = frobenius(term, sub_degree);
    }
    return acc;
}

Field::Raw Field::from_int(std::int64_t v) const {
    const std::int64_t p = data_->p;
    return static_cast<Raw>(((v % p) + p) % p);
}

std::vector<std::uint32_t> Field::coefficients(Raw a) const {
    std::vector<std::uint32_t> c(data_->k);
    for (std::uint32_t i = 0; i < data_->k; ++i) {
        c[i] = a % data_->p;
        a /= data_->p;
    }
    return c;
}

Field::Raw Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    require(coeffs.size() == data_->k, "coefficient vector has wrong length");
    Raw r = 0;
    for (std::uint32_t i = 0; i < data_->k; ++i) {
        require(coeffs[i] < data_->p, "coefficient not reduced mod p");
        r += coeffs[i] * data_->pow_p[i];
    }
    return r;
}

Field::Raw Field::generator() const {
    if (data_->k == 1) return 0;  // root of the modulus x
    return data_->p;
}

Field::Raw Field::primitive() const { return data_->primitive; }

std::uint64_t Field::canonical_key(Raw a) const {
    std::uint64_t key = 0;
    for (std::uint32_t i = 0; i < data_->k; ++i) {
        key = key * data_->p + a % data_->p;
        a /= data_->p;
    }
    return key;
}

bool Field::canonical_less(Raw a, Raw b) const { return canonical_key(a) < canonical_key(b); }

Element Field::element(Raw a) const {
    require(a < data_->order, "raw value out of range for " + name());
    return Element(*this, a);
}

Element Field::zero() const { return Element(*this, 0); }
Element Field::one() const { return Element(*this, 1); }

std::string Field::format(Raw a) const {
    std::ostringstream os;
    auto c = coefficients(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    return os.str();
}

Element::Element(Field field, Field::Raw raw) : field_(std::move(field)), raw_(raw) {}

void Element::check_same_field(const Element &o) const {
    require(field_ == o.field_, "mixed fields: " + field_.name() + " and " + o.field_.name());
}

Element Element::operator+(const Element &o) const {
    check_same_field(o);
    return Element(field_, field_.add(raw_, o.raw_));
}
Element Element::operator-(const Element &o) const {
    check_same_field(o);
    return Element(field_, field_.sub(raw_, o.raw_));
}
Element Element::operator*(const Element &o) const {
    check_same_field(o);
    return Element(field_, field_.mul(raw_, o.raw_));
}
Element Element::operator/(const Element &o) const {
    check_same_field(o);
    return Element(field_, field_.div(raw_, o.raw_));
}
Element Element::operator-() const { return Element(field_, field_.neg(raw_)); }
Element Element::inverse() const { return Element(field_, field_.inv(raw_)); }
Element Element::pow(std::uint64_t e) const { return Element(field_, field_.pow(raw_, e)); }

bool canonical_less(const Element &a, const Element &b) {
    require(a.field() == b.field(), "mixed fields in comparison");
    return a.field().canonical_less(a.raw(), b.raw());
}

Element frobenius(const Element &a, std::uint32_t i) { return Element(a.field(), a.field().frobenius(a.raw(), i)); }

Element relative_trace(const Element &a, std::uint32_t sub_degree) {
    return Element(a.field(), a.field().trace(a.raw(), sub_degree));
}

namespace {

// Solve for a left inverse of a K x k full-column-rank matrix over F_p
// (columns given as coefficient vectors). Returns k rows of length K.
std::vector<std::vector<std::uint32_t>> left_inverse(const std::vector<std::vector<std::uint32_t>> &cols,
                                                     std::uint32_t p) {
    const std::size_t k = cols.size();
    const std::size_t K = k ? cols[0].size() : 0;
    // Augmented [A^T | I_k]: reduce A^T (k x K) and track combos; pick K-side pivots.
    std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(K + k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < K; ++j) rows[i][j] = cols[i][j];
        rows[i][K + i] = 1;
    }
    std::vector<std::size_t> pivot_col(k);
    std::size_t r = 0;
    for (std::size_t c = 0; c < K && r < k; ++c) {
        std::size_t piv = r;
        while (piv < k && rows[piv][c] == 0) ++piv;
        if (piv == k) continue;
        std::swap(rows[piv], rows[r]);
        const std::uint64_t inv = mod_inv(rows[r][c], p);
        for (auto &v : rows[r]) v = v * inv % p;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const std::uint64_t f = rows[i][c];
            for (std::size_t j = 0; j < K + k; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
        }
        pivot_col[r] = c;
        ++r;
    }
    ensure(r == k, "embedding images are not independent");
    // Row i of the reduced system reads: sum_j M[i][j] a_j = e_{pivot_col[i]} . (A^T combos)
    // The coefficient a_j of a preimage equals sum over i of tracker[i][j] * b[pivot_col[i]].
    std::vector<std::vector<std::uint32_t>> inv(k, std::vector<std::uint32_t>(K, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            inv[j][pivot_col[i]] = static_cast<std::uint32_t>(rows[i][K + j]);
        }
    }
    return inv;
}

}  // namespace

Embedding::Embedding(Field source, Field target) : source_(std::move(source)), target_(std::move(target)) {
    require(source_.characteristic() == target_.characteristic(), "embed: characteristics differ");
    require(target_.degree() % source_.degree() == 0,
            "embed: " + source_.name() + " is not a subfield of " + target_.name());
    const std::uint32_t k = source_.degree();
    const auto mod = source_.modulus();
    auto eval_modulus = [&](Field::Raw z) {
        Field::Raw acc = 0;
        for (std::size_t i = mod.size(); i-- > 0;) {
            acc = target_.add(target_.mul(acc, z), target_.from_int(mod[i]));
        }
        return acc;
    };
    // The roots lie in the unique subfield of order p^k: {0} and powers of u.
    const std::uint64_t big = target_.order() - 1;
    const std::uint64_t small = source_.order() - 1;
    bool have = false;
    Field::Raw best = 0;
    auto consider = [&](Field::Raw z) {
        if (eval_modulus(z) != 0) return;
        if (!have || target_.canonical_less(z, best)) {
            best = z;
            have = true;
        }
    };
    consider(0);
    const Field::Raw u = target_.pow(target_.primitive(), big / small);
    Field::Raw z = 1;
    for (std::uint64_t j = 0; j < small; ++j) {
        consider(z);
        z = target_.mul(z, u);
    }
    ensure(have, "modulus has no root in the target field");
    root_ = best;

    Field::Raw power = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        images_.push_back(target_.coefficients(power));
        power = target_.mul(power, root_);
    }
    left_inverse_ = left_inverse(images_, target_.characteristic());
}

Field::Raw Embedding::map(Field::Raw a) const {
    const std::uint32_t p = target_.characteristic();
    const auto c = source_.coefficients(a);
    std::vector<std::uint32_t> out(target_.degree(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i]) continue;
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[j] = static_cast<std::uint32_t>((out[j] + static_cast<std::uint64_t>(c[i]) * images_[i][j]) % p);
        }
    }
    return target_.from_coefficients(out);
}

bool Embedding::preimage(Field::Raw b, Field::Raw &out) const {
    const std::uint64_t p = target_.characteristic();
    const auto c = target_.coefficients(b);
    std::vector<std::uint32_t> a(source_.degree(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < c.size(); ++j) acc = (acc + static_cast<std::uint64_t>(left_inverse_[i][j]) * c[j]) % p;
        a[i] = static_cast<std::uint32_t>(acc);
    }
    const Field::Raw candidate = source_.from_coefficients(a);
    if (map(candidate) != b) return false;
    out = candidate;
    return true;
}

const Embedding &embedding(const Field &source, const Field &target) {
    static std::mutex mu;
    static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::unique_ptr<Embedding>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(source.characteristic(), source.degree(), target.degree());
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<Embedding>(source, target)).first;
    }
    return *it->second;
}

Element embed(const Element &a, const Field &target) {
    return Element(target, embedding(a.field(), target).map(a.raw()));
}

Element restrict_to(const Element &a, const Field &subfield) {
    Field::Raw out = 0;
    require(embedding(subfield, a.field()).preimage(a.raw(), out),
            "element " + a.to_string() + " does not lie in " + subfield.name());
    return Element(subfield, out);
}

std::vector<Element> dual_basis(std::span<const Element> basis) {
    require(!basis.empty(), "not a basis: empty");
    const Field field = basis[0].field();
    const std::size_t k = field.degree();
    require(basis.size() == k, "not a basis: expected " + std::to_string(k) + " elements");
    for (const auto &b : basis) require(b.field() == field, "mixed fields in basis");
    const std::uint64_t p = field.characteristic();
    // Gram matrix of the trace form; entries lie in F_p (raw value < p).
    std::vector<std::vector<std::uint64_t>> m(k, std::vector<std::uint64_t>(2 * k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const Field::Raw t = field.trace(field.mul(basis[i].raw(), basis[j].raw()), 1);
            ensure(t < p, "trace did not land in the prime field");
            m[i][j] = t;
        }
        m[i][k + i] = 1;
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && m[piv][c] == 0) ++piv;
        require(piv < k, "not a basis");
        std::swap(m[piv], m[c]);
        const std::uint64_t inv = mod_inv(m[c][c], p);
        for (auto &v : m[c]) v = v * inv % p;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const std::uint64_t f = m[i][c];
            for (std::size_t j = 0; j < 2 * k; ++j) m[i][j] = (m[i][j] + (p - f) * m[c][j]) % p;
        }
    }
    // b'_j = sum_l (M^{-1})_{l j} b_l
    std::vector<Element> dual;
    dual.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        Field::Raw acc = 0;
        for (std::size_t l = 0; l < k; ++l) {
            acc = field.add(acc, field.mul(static_cast<Field::Raw>(m[l][k + j]), basis[l].raw()));
        }
        dual.emplace_back(field, acc);
    }
    return dual;
}

std::vector<Element> polynomial_basis(const Field &field) {
    std::vector<Element> out;
    Field::Raw x = 1;
    const Field::Raw w = field.generator();
    for (std::uint32_t i = 0; i < field.degree(); ++i) {
        out.emplace_back(field, x);
        x = field.mul(x, w);
    }
    return out;
}

}  // namespace agqc
