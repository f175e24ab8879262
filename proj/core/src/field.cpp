// Copyright 2026 The laurent-duality Authors
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

#include "ldual/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ldual/errors.hpp"

namespace ldual {

namespace detail {

struct FieldData {
    int order = 1;
    int degree = 1;
    std::vector<mpz_class> modulus;  // monic, length degree + 1
    // x^(degree + k) mod modulus for k = 0 .. degree - 2
    std::vector<std::vector<mpz_class>> high_powers;
};

}  // namespace detail

namespace {

using Poly = std::vector<mpz_class>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials where the divisor is monic.
Poly divide_monic(Poly num, const Poly& den) {
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) return {};
    Poly q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const mpz_class c = num[i];
        if (c == 0) continue;
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return q;
}

Poly cyclotomic_poly(int n, std::map<int, Poly>& cache) {
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(p, cyclotomic_poly(d, cache));
    trim(p);
    cache[n] = p;
    return p;
}

std::unique_ptr<detail::FieldData> make_field(int n) {
    std::map<int, Poly> cache;
    auto data = std::make_unique<detail::FieldData>();
    data->order = n;
    data->modulus = cyclotomic_poly(n, cache);
    data->degree = static_cast<int>(data->modulus.size()) - 1;
    const int deg = data->degree;
    // x^deg = -(modulus[0] + ... + modulus[deg-1] x^(deg-1))
    std::vector<mpz_class> cur(deg, 0);
    for (int i = 0; i < deg; ++i) cur[i] = -data->modulus[i];
    for (int k = 0; k + 1 < deg; ++k) {
        data->high_powers.push_back(cur);
        // multiply by x and reduce
        mpz_class top = cur[deg - 1];
        for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (int i = 0; i < deg; ++i) cur[i] -= top * data->modulus[i];
    }
    return data;
}

const detail::FieldData* intern(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<detail::FieldData>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = registry[n];
    if (!slot) slot = make_field(n);
    return slot.get();
}

// Reduce a rational polynomial of degree < 2*deg - 1 modulo the cyclotomic
// polynomial into a coefficient vector of length deg.
std::vector<mpq_class> reduce(const detail::FieldData& f, std::vector<mpq_class> p) {
    const auto deg = static_cast<std::size_t>(f.degree);
    if (p.size() <= deg) {
        p.resize(deg, 0);
        return p;
    }
    std::vector<mpq_class> out(p.begin(), p.begin() + deg);
    for (std::size_t k = deg; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        const auto& row = f.high_powers.at(k - deg);
        for (std::size_t i = 0; i < deg; ++i)
            if (row[i] != 0) out[i] += p[k] * row[i];
    }
    return out;
}

std::vector<mpq_class> reduce_long(const detail::FieldData& f, std::vector<mpq_class> p) {
    // Arbitrary length: fold from the top using the monic modulus.
    const auto deg = static_cast<std::size_t>(f.degree);
    for (std::size_t k = p.size(); k-- > deg;) {
        if (p[k] == 0) continue;
        const mpq_class c = p[k];
        for (std::size_t i = 0; i <= deg; ++i) p[k - deg + i] -= c * f.modulus[i];
    }
    p.resize(deg, 0);
    return p;
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

Field::Field() : data_(intern(1)) {}
Field Field::rational() { return Field(intern(1)); }

Field Field::cyclotomic(int order) {
    if (order < 1) throw InvalidInput("cyclotomic order must be positive");
    return Field(intern(order));
}

Field Field::parse(std::string_view text) {
    std::string t(text);
    if (t == "Q" || t == "QQ" || t == "rational" || t == "ℚ") return rational();
    auto parse_int = [&](std::string_view digits) {
        if (digits.empty()) throw ParseError("bad field declaration: " + t);
        int v = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') throw ParseError("bad field declaration: " + t);
            v = v * 10 + (c - '0');
            if (v > 100000) throw ParseError("cyclotomic order too large: " + t);
        }
        return v;
    };
    const std::string_view sv(t);
    if (sv.rfind("cyclotomic:", 0) == 0) return cyclotomic(parse_int(sv.substr(11)));
    if (sv.rfind("Q(zeta_", 0) == 0 && sv.back() == ')')
        return cyclotomic(parse_int(sv.substr(7, sv.size() - 8)));
    throw ParseError("bad field declaration: " + t);
}

int Field::order() const { return data_->order; }
int Field::degree() const { return data_->degree; }
const std::vector<mpz_class>& Field::modulus() const { return data_->modulus; }

std::string Field::name() const {
    return is_rational() ? std::string("Q") : "cyclotomic:" + std::to_string(order());
}

Scalar Field::zero() const { return Scalar(*this, {}); }
Scalar Field::one() const { return from_int(1); }
Scalar Field::from_int(long v) const { return from_rational(mpq_class(v)); }

Scalar Field::from_rational(const mpq_class& q) const {
    std::vector<mpq_class> c(degree(), 0);
    c[0] = q;
    return Scalar(*this, std::move(c));
}

Scalar Field::generator() const {
    std::vector<mpq_class> c(2, 0);
    c[1] = 1;
    return Scalar(*this, std::move(c));
}

Scalar::Scalar() : field_(intern(1)), coeffs_(1, 0) {}

Scalar::Scalar(Field field, std::vector<mpq_class> coeffs) : field_(field.data_) {
    for (auto& c : coeffs) c.canonicalize();
    if (coeffs.size() <= static_cast<std::size_t>(field_->degree)) {
        coeffs.resize(field_->degree, 0);
        coeffs_ = std::move(coeffs);
    } else {
        coeffs_ = reduce_long(*field_, std::move(coeffs));
    }
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Scalar::is_one() const { return is_rational() && coeffs_[0] == 1; }

void Scalar::check_same_field(const Scalar& other) const {
    if (field_ != other.field_) throw FieldMismatch(field().name(), other.field().name());
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    const std::size_t deg = a.coeffs_.size();
    if (deg == 1) {
        Scalar r = a;
        r.coeffs_[0] *= b.coeffs_[0];
        return r;
    }
    std::vector<mpq_class> prod(2 * deg - 1, 0);
    for (std::size_t i = 0; i < deg; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j)
            if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    Scalar r;
    r.field_ = a.field_;
    r.coeffs_ = reduce(*a.field_, std::move(prod));
    return r;
}

Scalar& Scalar::operator*=(const Scalar& rhs) { return *this = *this * rhs; }
Scalar& Scalar::operator/=(const Scalar& rhs) { return *this = *this * rhs.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) {
        Scalar r = *this;
        r.coeffs_[0] = 1 / coeffs_[0];
        return r;
    }
    // Extended Euclid in Q[x] against the (irreducible) cyclotomic modulus.
    using QPoly = std::vector<mpq_class>;
    auto qtrim = [](QPoly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    auto sub_scaled = [](QPoly& p, const QPoly& q, const mpq_class& c, std::size_t shift) {
        if (p.size() < q.size() + shift) p.resize(q.size() + shift, 0);
        for (std::size_t i = 0; i < q.size(); ++i) p[i + shift] -= c * q[i];
    };
    QPoly r0(field_->modulus.begin(), field_->modulus.end());
    QPoly r1 = coeffs_;
    QPoly s0, s1{1};  // coefficients of *this
    qtrim(r1);
    while (r1.size() > 1) {
        QPoly q;
        QPoly rem = r0;
        while (rem.size() >= r1.size()) {
            const std::size_t shift = rem.size() - r1.size();
            const mpq_class c = rem.back() / r1.back();
            if (q.size() <= shift) q.resize(shift + 1, 0);
            q[shift] = c;
            sub_scaled(rem, r1, c, shift);
            rem.pop_back();
            qtrim(rem);
        }
        QPoly s2 = s0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            sub_scaled(s2, s1, q[i], i);
        }
        qtrim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant c with s1 * (*this) = c.
    const mpq_class c = r1.at(0);
    for (auto& v : s1) v /= c;
    return Scalar(field(), std::move(s1));
}

Scalar Scalar::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result = field().one();
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string Scalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpq_class& c = coeffs_[k];
        if (c == 0) continue;
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const Field& f) { return os << f.name(); }

bool embeds_into(Field source, Field target) {
    return source.degree() == 1 || target.order() % source.order() == 0;
}

Scalar embed(const Scalar& a, Field target) {
    const Field source = a.field();
    if (source == target) return a;
    if (a.is_rational()) return target.from_rational(a.constant_term());
    if (!embeds_into(source, target))
        throw EmbeddingError("no canonical embedding " + source.name() + " -> " + target.name());
    const int step = target.order() / source.order();
    const auto& c = a.coefficients();
    std::vector<mpq_class> img(static_cast<std::size_t>(step) * (c.size() - 1) + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) img[k * step] = c[k];
    return Scalar(target, std::move(img));
}

std::optional<RootOfUnity> as_root_of_unity(const Scalar& value) {
    const Field f = value.field();
    const int n = f.order();
    const int ambient = (n % 2 == 0) ? n : 2 * n;
    const Scalar w = (n % 2 == 0) ? f.generator() : -f.generator();
    Scalar cur = f.one();
    for (int a = 0; a < ambient; ++a) {
        if (cur == value) return RootOfUnity{ambient, a, ambient / std::gcd(a, ambient)};
        cur *= w;
    }
    return std::nullopt;
}

}  // namespace ldual
