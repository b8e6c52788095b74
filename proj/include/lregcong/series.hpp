/*
   Copyright 2026 The lregcong Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LREGCONG_SERIES_HPP
#define LREGCONG_SERIES_HPP

// Truncated formal power series in q over Z (overflow-checked) or Z/mZ.
//
// A series of precision N knows the coefficients of q^0..q^N exactly; binary operations
// yield min(N_a, N_b) and nothing is ever silently extended. In modular mode every
// coefficient is stored as its canonical representative in [0, m).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lregcong/arith.hpp"
#include "lregcong/error.hpp"

namespace lregcong {

using Modulus = std::uint64_t;

// Moduli up to 2^62 keep every sum of two residues inside uint64.
inline constexpr Modulus kMaxModulus = Modulus{1} << 62;

inline void validate_modulus(Modulus m) {
    if (m == 0 || m > kMaxModulus) throw UsageError("modulus must lie in [1, 2^62]");
}

template <typename T>
class TruncatedSeries {
   public:
    using value_type = T;

    explicit TruncatedSeries(std::vector<T> coeffs, std::optional<Modulus> modulus = std::nullopt)
        : coeffs_(std::move(coeffs)), modulus_(modulus) {
        if (coeffs_.empty()) throw UsageError("a truncated series needs at least a constant term");
        if (modulus_) {
            validate_modulus(*modulus_);
            for (auto& c : coeffs_) c = static_cast<T>(reduce_mod(c, *modulus_));
        }
    }

    static TruncatedSeries constant(T value, std::size_t precision, std::optional<Modulus> modulus = std::nullopt) {
        std::vector<T> coeffs(precision + 1, T{0});
        coeffs[0] = value;
        return TruncatedSeries(std::move(coeffs), modulus);
    }

    static TruncatedSeries zero(std::size_t precision, std::optional<Modulus> modulus = std::nullopt) {
        return constant(T{0}, precision, modulus);
    }

    // Takes ownership of coefficients already in canonical form.
    static TruncatedSeries from_canonical(std::vector<T> coeffs, std::optional<Modulus> modulus) {
        TruncatedSeries s;
        s.coeffs_ = std::move(coeffs);
        s.modulus_ = modulus;
        return s;
    }

    std::size_t precision() const noexcept { return coeffs_.size() - 1; }
    const std::optional<Modulus>& modulus() const noexcept { return modulus_; }
    bool is_modular() const noexcept { return modulus_.has_value(); }

    T operator[](std::size_t n) const noexcept { return coeffs_[n]; }

    T at(std::size_t n) const {
        if (n > precision()) throw PrecisionShortfall("coefficient beyond series precision", n);
        return coeffs_[n];
    }

    std::span<const T> coefficients() const noexcept { return coeffs_; }

    std::size_t nonzero_count() const noexcept {
        return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](T c) { return c != 0; }));
    }

    TruncatedSeries truncated(std::size_t precision) const {
        if (precision > this->precision()) throw PrecisionShortfall("cannot extend a truncated series", precision);
        return from_canonical(std::vector<T>(coeffs_.begin(), coeffs_.begin() + precision + 1), modulus_);
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

   private:
    TruncatedSeries() = default;

    std::vector<T> coeffs_;
    std::optional<Modulus> modulus_;
};

namespace detail {

template <typename T>
struct Term {
    std::size_t index;
    T value;
};

template <typename T>
std::vector<Term<T>> nonzero_terms(const TruncatedSeries<T>& s, std::size_t limit, std::size_t first = 0) {
    std::vector<Term<T>> terms;
    for (std::size_t i = first; i <= limit; ++i)
        if (s[i] != 0) terms.push_back({i, s[i]});
    return terms;
}

template <typename T>
void require_compatible(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    if (a.modulus() != b.modulus()) throw UsageError("series moduli differ");
}

template <typename T>
bool is_sparse(const TruncatedSeries<T>& s) {
    return 4 * s.nonzero_count() <= s.precision() + 1;
}

// out[n] += v * x, in the ring selected by `modulus`.
template <typename T>
void accumulate(T& out, T v, T x, const std::optional<Modulus>& modulus, std::size_t n) {
    if (!modulus) {
        out = checked_add(out, checked_mul(v, x, n), n);
        return;
    }
    const Modulus m = *modulus;
    const auto uo = static_cast<std::uint64_t>(out);
    const auto ux = static_cast<std::uint64_t>(x);
    const auto uv = static_cast<std::uint64_t>(v);
    std::uint64_t r;
    if (uv == 1)
        r = add_mod(uo, ux, m);
    else if (uv == m - 1)
        r = add_mod(uo, ux == 0 ? 0 : m - ux, m);
    else
        r = add_mod(uo, mul_mod(uv, ux, m), m);
    out = static_cast<T>(r);
}

template <typename T>
T negate(T v, const std::optional<Modulus>& modulus, std::size_t n) {
    if (!modulus) return checked_sub(T{0}, v, n);
    return v == 0 ? T{0} : static_cast<T>(*modulus - static_cast<std::uint64_t>(v));
}

template <typename T>
T multiply(T a, T b, const std::optional<Modulus>& modulus, std::size_t n) {
    if (!modulus) return checked_mul(a, b, n);
    return static_cast<T>(mul_mod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b), *modulus));
}

}  // namespace detail

// (q;q)_inf = prod_{i>=1} (1 - q^i), expanded through q^N via the pentagonal number theorem.
template <typename T = std::int64_t>
TruncatedSeries<T> euler_series(std::size_t N, std::optional<Modulus> modulus = std::nullopt) {
    std::vector<T> coeffs(N + 1, T{0});
    coeffs[0] = 1;
    for (std::size_t k = 1;; ++k) {
        const std::size_t lower = k * (3 * k - 1) / 2;
        if (lower > N) break;
        const T sign = (k % 2 == 0) ? T{1} : T{-1};
        coeffs[lower] = sign;
        const std::size_t upper = k * (3 * k + 1) / 2;
        if (upper <= N) coeffs[upper] = sign;
    }
    return TruncatedSeries<T>(std::move(coeffs), modulus);
}

template <typename T>
TruncatedSeries<T> add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    detail::require_compatible(a, b);
    const std::size_t N = std::min(a.precision(), b.precision());
    std::vector<T> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        out[n] = a[n];
        detail::accumulate(out[n], T{1}, b[n], a.modulus(), n);
    }
    return TruncatedSeries<T>::from_canonical(std::move(out), a.modulus());
}

template <typename T>
TruncatedSeries<T> negate(const TruncatedSeries<T>& a) {
    std::vector<T> out(a.precision() + 1);
    for (std::size_t n = 0; n <= a.precision(); ++n) out[n] = detail::negate(a[n], a.modulus(), n);
    return TruncatedSeries<T>::from_canonical(std::move(out), a.modulus());
}

template <typename T>
TruncatedSeries<T> sub(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    return add(a, negate(b));
}

// Cauchy product truncated at the smaller precision. When one operand is sparse (Euler and
// theta series) the product is scattered from its nonzero terms.
template <typename T>
TruncatedSeries<T> mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    detail::require_compatible(a, b);
    const std::size_t N = std::min(a.precision(), b.precision());
    const auto& modulus = a.modulus();
    std::vector<T> out(N + 1, T{0});

    const bool a_sparse = detail::is_sparse(a);
    if (a_sparse || detail::is_sparse(b)) {
        const auto& sparse = a_sparse ? a : b;
        const auto& dense = a_sparse ? b : a;
        for (const auto& [i, v] : detail::nonzero_terms(sparse, N))
            for (std::size_t n = i; n <= N; ++n)
                if (dense[n - i] != 0) detail::accumulate(out[n], v, dense[n - i], modulus, n);
    } else {
        const auto terms = detail::nonzero_terms(a, N);
        for (std::size_t n = 0; n <= N; ++n) {
            T acc{0};
            for (const auto& [i, v] : terms) {
                if (i > n) break;
                if (b[n - i] != 0) detail::accumulate(acc, v, b[n - i], modulus, n);
            }
            out[n] = acc;
        }
    }
    return TruncatedSeries<T>::from_canonical(std::move(out), modulus);
}

template <typename T>
TruncatedSeries<T> operator*(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    return mul(a, b);
}

template <typename T>
TruncatedSeries<T> operator+(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    return add(a, b);
}

template <typename T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    return sub(a, b);
}

// a^e. A sparse base is multiplied in one factor at a time so that no intermediate product
// is larger than the partial powers themselves; otherwise binary exponentiation.
template <typename T>
TruncatedSeries<T> pow(const TruncatedSeries<T>& a, unsigned e) {
    auto result = TruncatedSeries<T>::constant(T{1}, a.precision(), a.modulus());
    if (e == 0) return result;
    if (detail::is_sparse(a)) {
        result = a;
        for (unsigned i = 1; i < e; ++i) result = mul(result, a);
        return result;
    }
    auto base = a;
    for (;;) {
        if (e & 1u) result = mul(result, base);
        e >>= 1u;
        if (e == 0) break;
        base = mul(base, base);
    }
    return result;
}

// Multiplicative inverse; the constant term must be a unit (+-1 over Z).
template <typename T>
TruncatedSeries<T> inverse(const TruncatedSeries<T>& a) {
    const auto& modulus = a.modulus();
    const std::size_t N = a.precision();
    T inv0;
    if (modulus) {
        const std::uint64_t u = inverse_mod(static_cast<std::uint64_t>(a[0]), *modulus);
        if (u == 0 && *modulus != 1) throw DomainError("constant term is not invertible modulo m");
        inv0 = static_cast<T>(u);
    } else {
        if (a[0] != 1 && a[0] != -1) throw DomainError("constant term is not a unit over the integers");
        inv0 = a[0];
    }

    const auto terms = detail::nonzero_terms(a, N, 1);
    std::vector<T> out(N + 1, T{0});
    out[0] = inv0;
    for (std::size_t n = 1; n <= N; ++n) {
        T acc{0};
        for (const auto& [i, v] : terms) {
            if (i > n) break;
            if (out[n - i] != 0) detail::accumulate(acc, v, out[n - i], modulus, n);
        }
        out[n] = detail::multiply(detail::negate(acc, modulus, n), inv0, modulus, n);
    }
    return TruncatedSeries<T>::from_canonical(std::move(out), modulus);
}

// Coefficient n of the result is coefficient step*n + residue of the input.
template <typename T>
TruncatedSeries<T> dissect(const TruncatedSeries<T>& a, std::size_t step, std::size_t residue) {
    if (step == 0) throw UsageError("dissection step must be positive");
    if (residue >= step) throw UsageError("dissection residue must lie in [0, step)");
    if (residue > a.precision()) throw PrecisionShortfall("dissection residue beyond series precision", residue);
    const std::size_t N = (a.precision() - residue) / step;
    std::vector<T> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n) out[n] = a[step * n + residue];
    return TruncatedSeries<T>::from_canonical(std::move(out), a.modulus());
}

// a(q^factor) through q^precision. Coefficients beyond factor*(N+1)-1 would be unknown.
template <typename T>
TruncatedSeries<T> dilate(const TruncatedSeries<T>& a, std::size_t factor, std::size_t precision) {
    if (factor == 0) throw UsageError("dilation factor must be positive");
    if (precision / factor > a.precision())
        throw PrecisionShortfall("dilated series would exceed known coefficients", factor * (a.precision() + 1));
    std::vector<T> out(precision + 1, T{0});
    for (std::size_t i = 0; i * factor <= precision; ++i) out[i * factor] = a[i];
    return TruncatedSeries<T>::from_canonical(std::move(out), a.modulus());
}

// Exact series reduced modulo m.
template <typename T>
TruncatedSeries<T> reduce(const TruncatedSeries<T>& a, Modulus m) {
    if (a.is_modular()) throw UsageError("series is already modular");
    return TruncatedSeries<T>(std::vector<T>(a.coefficients().begin(), a.coefficients().end()), m);
}

template <typename U, typename T>
TruncatedSeries<U> widen(const TruncatedSeries<T>& a) {
    std::vector<U> out(a.coefficients().begin(), a.coefficients().end());
    return TruncatedSeries<U>::from_canonical(std::move(out), a.modulus());
}

}  // namespace lregcong

#endif  // LREGCONG_SERIES_HPP
