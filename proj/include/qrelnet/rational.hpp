// Copyright 2026 The qrelnet Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Small exact rational number over 64-bit integers. Every operation is
 * carried out in 128-bit intermediates and reduced; a result that does not
 * fit back into 64 bits raises `rational_overflow` instead of wrapping.
 */

#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "qrelnet/error.hpp"

namespace qrelnet {

class Rational {
  public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t value) noexcept : num_(value) {} // NOLINT

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) {
            throw Error(errc::division_by_zero, "rational with zero denominator");
        }
        assign(static_cast<__int128>(num), static_cast<__int128>(den));
    }

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
    [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }

    [[nodiscard]] double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "n" for integers, "n/d" otherwise.
    [[nodiscard]] std::string str() const {
        if (den_ == 1) {
            return std::to_string(num_);
        }
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "n", "n/d" and, for probability inputs, finite decimals
    /// such as "0.125".
    static Rational parse(std::string_view text) {
        auto fail = [&] {
            throw Error(errc::invalid_rational,
                        "not a rational number: '" + std::string(text) + "'");
        };
        auto parse_int = [&](std::string_view s) {
            std::int64_t v = 0;
            if (s.empty()) {
                fail();
            }
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || ptr != s.data() + s.size()) {
                fail();
            }
            return v;
        };
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            return {parse_int(text.substr(0, slash)),
                    parse_int(text.substr(slash + 1))};
        }
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            std::string_view whole = text.substr(0, dot);
            std::string_view frac = text.substr(dot + 1);
            bool negative = !whole.empty() && whole.front() == '-';
            if (negative) {
                whole.remove_prefix(1);
            }
            if (frac.size() > 18 || (whole.empty() && frac.empty()) ||
                (!frac.empty() && frac.front() == '-') ||
                (!whole.empty() && whole.front() == '-')) {
                fail();
            }
            std::int64_t scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) {
                scale *= 10;
            }
            Rational w = whole.empty() ? Rational{} : Rational{parse_int(whole)};
            Rational f = frac.empty() ? Rational{} : Rational{parse_int(frac), scale};
            Rational r = w + f;
            return negative ? -r : r;
        }
        return {parse_int(text)};
    }

    friend Rational operator+(const Rational &a, const Rational &b) {
        if (a.den_ == 1 && b.den_ == 1) {
            return from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
        }
        return from_wide(static_cast<__int128>(a.num_) * b.den_ +
                             static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational &a, const Rational &b) {
        return a + (-b);
    }
    friend Rational operator*(const Rational &a, const Rational &b) {
        if (a.num_ == 0 || b.num_ == 0) {
            return {};
        }
        return from_wide(static_cast<__int128>(a.num_) * b.num_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational &a, const Rational &b) {
        if (b.num_ == 0) {
            throw Error(errc::division_by_zero, "rational division by zero");
        }
        return from_wide(static_cast<__int128>(a.num_) * b.den_,
                         static_cast<__int128>(a.den_) * b.num_);
    }
    Rational operator-() const {
        return from_wide(-static_cast<__int128>(num_), den_);
    }

    Rational &operator+=(const Rational &o) { return *this = *this + o; }
    Rational &operator-=(const Rational &o) { return *this = *this - o; }
    Rational &operator*=(const Rational &o) { return *this = *this * o; }
    Rational &operator/=(const Rational &o) { return *this = *this / o; }

    friend constexpr bool operator==(const Rational &, const Rational &) = default;

    friend std::strong_ordering operator<=>(const Rational &a,
                                            const Rational &b) noexcept {
        return static_cast<__int128>(a.num_) * b.den_ <=>
               static_cast<__int128>(b.num_) * a.den_;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
        return os << r.str();
    }

  private:
    static __int128 gcd_wide(__int128 a, __int128 b) noexcept {
        if (a < 0) {
            a = -a;
        }
        if (b < 0) {
            b = -b;
        }
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_wide(__int128 num, __int128 den) {
        Rational r;
        r.assign(num, den);
        return r;
    }

    void assign(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd_wide(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr __int128 lo = INT64_MIN + 1;
        constexpr __int128 hi = INT64_MAX;
        if (num < lo || num > hi || den > hi) {
            throw Error(errc::rational_overflow,
                        "rational value does not fit in 64 bits");
        }
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace qrelnet
