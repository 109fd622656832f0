// nomabc: multi-cell NOMA backscatter spectral-efficiency optimizer
// Copyright (C) 2026 The nomabc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace nomabc {

class DegeneratePolynomial : public std::domain_error
{
public:
    DegeneratePolynomial() : std::domain_error("degenerate polynomial") {}
};

/// c[0] + c[1] x + ... + c[4] x^4
template <std::floating_point T>
struct BasicPoly4
{
    std::array<T, 5> c{};

    T operator()(T x) const
    {
        T acc = c[4];
        for (int k = 3; k >= 0; --k)
            acc = acc * x + c[k];
        return acc;
    }

    T derivative(T x) const
    {
        return ((T(4) * c[4] * x + T(3) * c[3]) * x + T(2) * c[2]) * x + c[1];
    }

    T max_abs_coeff() const
    {
        T m = 0;
        for (T v : c)
            m = std::max(m, std::abs(v));
        return m;
    }

    /// max(1, max_k |c_k| |x|^k): the scale against which residuals are judged.
    T residual_scale(T x) const
    {
        T s = 1;
        T xp = 1;
        for (int k = 0; k < 5; ++k, xp *= std::abs(x))
            s = std::max(s, std::abs(c[k]) * xp);
        return s;
    }

    T scaled_residual(T x) const { return std::abs((*this)(x)) / residual_scale(x); }

    /// Highest k with |c_k| above rel_tol * max|c|, or -1 for the zero polynomial.
    int effective_degree(T rel_tol = T(1e-12)) const
    {
        const T m = max_abs_coeff();
        if (m == T(0))
            return -1;
        for (int k = 4; k >= 0; --k)
            if (std::abs(c[k]) > rel_tol * m)
                return k;
        return -1;
    }
};

using Poly4 = BasicPoly4<double>;

inline constexpr double kRootMergeTol = 1e-9;
inline constexpr double kLeadingRelTol = 1e-12;

namespace detail {

template <std::floating_point T>
void sort_and_merge(std::vector<T> &roots, T tol)
{
    std::sort(roots.begin(), roots.end());
    std::vector<T> out;
    for (T r : roots)
    {
        if (!out.empty() && std::abs(r - out.back()) <= tol * std::max(T(1), std::abs(r)))
            continue;
        out.push_back(r);
    }
    roots = std::move(out);
}

/// Roots of x^3 + a x^2 + b x + c.
template <std::floating_point T>
std::vector<T> monic_cubic_roots(T a, T b, T c)
{
    const T shift = a / T(3);
    const T p = b - a * a / T(3);
    const T q = T(2) * a * a * a / T(27) - a * b / T(3) + c;
    const T half_q = q / T(2);
    const T third_p = p / T(3);
    const T disc = half_q * half_q + third_p * third_p * third_p;
    const T disc_scale = half_q * half_q + std::abs(third_p * third_p * third_p);
    std::vector<T> t;
    if (std::abs(disc) <= T(64) * std::numeric_limits<T>::epsilon() * disc_scale)
    {
        // repeated root
        const T u = std::cbrt(-half_q);
        t = {T(2) * u, -u};
    }
    else if (disc > 0)
    {
        const T big = std::cbrt(std::abs(half_q) + std::sqrt(disc));
        const T a_term = half_q > 0 ? -big : big;
        const T b_term = a_term != T(0) ? -third_p / a_term : T(0);
        t = {a_term + b_term};
    }
    else
    {
        const T r = T(2) * std::sqrt(-third_p);
        const T arg = std::clamp(T(3) * q / (T(2) * p) * std::sqrt(T(-3) / p), T(-1), T(1));
        const T ang = std::acos(arg) / T(3);
        for (int k = 0; k < 3; ++k)
            t.push_back(r * std::cos(ang - T(2) * std::numbers::pi_v<T> * T(k) / T(3)));
    }
    for (T &v : t)
        v -= shift;
    return t;
}

} // namespace detail

/// Real roots of a x^2 + b x + c, sorted ascending. Uses the cancellation-free
/// form q = -(b + sgn(b) sqrt(disc)) / 2, x1 = q / a, x2 = c / q.
template <std::floating_point T>
std::vector<T> quadratic_roots(T a, T b, T c)
{
    const T scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    if (scale == T(0))
        throw DegeneratePolynomial();
    if (std::abs(a) <= T(kLeadingRelTol) * scale)
    {
        if (b == T(0))
            return {};
        return {-c / b};
    }
    const T disc = b * b - T(4) * a * c;
    std::vector<T> roots;
    if (disc < 0)
    {
        if (disc < -T(64) * std::numeric_limits<T>::epsilon() * (b * b + std::abs(T(4) * a * c)))
            return {};
        roots = {-b / (T(2) * a)};
    }
    else
    {
        const T q = -(b + std::copysign(std::sqrt(disc), b)) / T(2);
        if (q == T(0))
            roots = {T(0)};
        else
            roots = {q / a, c / q};
    }
    detail::sort_and_merge(roots, T(kRootMergeTol));
    return roots;
}

namespace detail {

/// Closed-form candidates for a polynomial of exact degree 1..4 (no zero root factored).
template <std::floating_point T>
std::vector<T> closed_form_roots(const BasicPoly4<T> &p, int deg)
{
    const auto &c = p.c;
    switch (deg)
    {
    case 1:
        return {-c[0] / c[1]};
    case 2:
        return quadratic_roots(c[2], c[1], c[0]);
    case 3:
        return monic_cubic_roots(c[2] / c[3], c[1] / c[3], c[0] / c[3]);
    default:
        break;
    }
    // Ferrari: depress, split through the largest resolvent root into two quadratics.
    const T a = c[3] / c[4], b = c[2] / c[4], cc = c[1] / c[4], d = c[0] / c[4];
    const T a2 = a * a;
    const T dp = b - T(3) * a2 / T(8);
    const T dq = cc - a * b / T(2) + a2 * a / T(8);
    const T dr = d - a * cc / T(4) + a2 * b / T(16) - T(3) * a2 * a2 / T(256);
    const T shift = a / T(4);
    const T q_scale = std::max({T(1), std::abs(dp) * std::sqrt(std::abs(dp)), std::abs(dr) * std::sqrt(std::sqrt(std::abs(dr)))});
    std::vector<T> y;
    if (std::abs(dq) <= T(1e-14) * q_scale)
    {
        for (T z : quadratic_roots(T(1), dp, dr))
        {
            if (z > 0)
            {
                y.push_back(std::sqrt(z));
                y.push_back(-std::sqrt(z));
            }
            else if (z > -T(1e-14) * std::max(T(1), std::abs(dp)))
                y.push_back(T(0));
        }
    }
    else
    {
        auto res = monic_cubic_roots(dp, dp * dp / T(4) - dr, -dq * dq / T(8));
        T m = *std::max_element(res.begin(), res.end());
        // polish the resolvent root; it must be strictly positive
        for (int it = 0; it < 4 && m > 0; ++it)
        {
            const T f = ((m + dp) * m + (dp * dp / T(4) - dr)) * m - dq * dq / T(8);
            const T df = (T(3) * m + T(2) * dp) * m + (dp * dp / T(4) - dr);
            if (df == T(0))
                break;
            const T next = m - f / df;
            if (!(next > 0))
                break;
            m = next;
        }
        if (m > 0)
        {
            const T s = std::sqrt(T(2) * m);
            for (T v : quadratic_roots(T(1), -s, dp / T(2) + m + dq / (T(2) * s)))
                y.push_back(v);
            for (T v : quadratic_roots(T(1), s, dp / T(2) + m - dq / (T(2) * s)))
                y.push_back(v);
        }
    }
    for (T &v : y)
        v -= shift;
    return y;
}

template <std::floating_point T>
T newton_polish(const BasicPoly4<T> &p, T x)
{
    T best = x;
    T best_res = std::abs(p(x));
    for (int it = 0; it < 12; ++it)
    {
        const T d = p.derivative(x);
        if (d == T(0) || !std::isfinite(d))
            break;
        const T next = x - p(x) / d;
        if (!std::isfinite(next))
            break;
        const T res = std::abs(p(next));
        x = next;
        if (res < best_res)
        {
            best = next;
            best_res = res;
        }
        if (res == T(0))
            break;
    }
    return best;
}

} // namespace detail

/// All distinct real roots of a polynomial of degree <= 4, ascending.
/// Leading coefficients below 1e-12 of the largest are dropped; roots closer
/// than 1e-9 are merged; each root is Newton-polished on the input polynomial.
template <std::floating_point T>
std::vector<T> real_roots(const BasicPoly4<T> &input, T residual_tol = T(1e-8))
{
    const T m = input.max_abs_coeff();
    if (m == T(0))
        throw DegeneratePolynomial();
    BasicPoly4<T> p;
    for (int k = 0; k < 5; ++k)
        p.c[k] = input.c[k] / m;
    int deg = p.effective_degree(T(kLeadingRelTol));
    for (int k = deg + 1; k < 5; ++k)
        p.c[k] = T(0);

    std::vector<T> roots;
    // factor out exact zero roots
    int low = 0;
    while (low < deg && p.c[low] == T(0))
        ++low;
    if (low > 0)
    {
        roots.push_back(T(0));
        BasicPoly4<T> shifted;
        for (int k = low; k <= deg; ++k)
            shifted.c[k - low] = p.c[k];
        deg -= low;
        if (deg > 0)
            for (T r : detail::closed_form_roots(shifted, deg))
                roots.push_back(r);
    }
    else if (deg > 0)
    {
        roots = detail::closed_form_roots(p, deg);
    }

    std::vector<T> out;
    for (T r : roots)
    {
        if (!std::isfinite(r))
            continue;
        r = detail::newton_polish(p, r);
        if (p.scaled_residual(r) <= residual_tol)
            out.push_back(r);
    }
    detail::sort_and_merge(out, T(kRootMergeTol));
    return out;
}

} // namespace nomabc
