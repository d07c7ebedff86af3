// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_NEP_RESOLVENT_HPP
#define POLEFIND_NEP_RESOLVENT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <list>
#include <memory>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polefind/aaa/aaa.hpp"
#include "polefind/nep/matrix_function.hpp"
#include "polefind/numerics/lu.hpp"

namespace polefind::nep {

namespace detail {

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

/// Standard complex Gaussian (E|z|^2 = 1) from explicit Box-Muller on the
/// raw generator words, so streams are reproducible across platforms.
inline Cplx complex_gaussian(std::mt19937_64& rng) {
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1p-53;
    const double r = std::sqrt(-std::log(u1));
    return std::polar(r, kTwoPi * u2);
}

struct KeyBits {
    std::uint64_t re, im;
    bool operator==(const KeyBits&) const = default;
};

struct KeyBitsHash {
    std::size_t operator()(const KeyBits& k) const {
        std::uint64_t h = k.re * 0x9e3779b97f4a7c15ULL;
        h ^= k.im + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

inline KeyBits key_of(Cplx z) {
    static_assert(sizeof(double) == sizeof(std::uint64_t));
    KeyBits k;
    const double re = z.real(), im = z.imag();
    std::memcpy(&k.re, &re, sizeof(double));
    std::memcpy(&k.im, &im, sizeof(double));
    return k;
}

}  // namespace detail

/// The randomly scalarized resolvent S(k) = u^* F(k)^{-1} v with u, v drawn
/// once from the seeded complex Gaussian and fixed for the object lifetime.
/// Factorizations are kept in a small LRU cache so eigenvector extraction
/// can reuse the factorization at a refined eigenvalue. Evaluation at
/// distinct points is safe from several threads (last writer wins in the
/// cache).
class ScalarizedResolvent {
public:
    ScalarizedResolvent(MatrixFunction f, std::uint64_t seed, std::size_t cache_capacity = 64)
        : nep_(std::move(f)), seed_(seed), capacity_(cache_capacity) {
        std::mt19937_64 rng(seed);
        u_.resize(static_cast<std::size_t>(nep_.dimension()));
        v_.resize(static_cast<std::size_t>(nep_.dimension()));
        for (Cplx& z : u_) z = detail::complex_gaussian(rng);
        for (Cplx& z : v_) z = detail::complex_gaussian(rng);
    }

    /// Explicit scalarization vectors (tests, symmetry experiments).
    ScalarizedResolvent(MatrixFunction f, CVector u, CVector v, std::size_t cache_capacity = 64)
        : nep_(std::move(f)), seed_(0), capacity_(cache_capacity), u_(std::move(u)), v_(std::move(v)) {
        if (static_cast<Index>(u_.size()) != nep_.dimension() ||
            static_cast<Index>(v_.size()) != nep_.dimension())
            throw DimensionError("ScalarizedResolvent: u, v must match the problem dimension");
        if (norm2(u_) == 0.0 || norm2(v_) == 0.0)
            throw InvalidInputError("ScalarizedResolvent: u, v must be nonzero");
    }

    const MatrixFunction& nep() const { return nep_; }
    const CVector& u() const { return u_; }
    const CVector& v() const { return v_; }
    std::uint64_t seed() const { return seed_; }

    /// u^* F(k)^{-1} v. Throws SingularMatrixError when F(k) is exactly
    /// singular (k is then an eigenvalue to machine precision).
    Cplx operator()(Cplx k) const {
        const auto f = factorization_at(k);
        const CVector x = lu_solve(*f, v_);
        return dot(u_, x);
    }

    /// Factorization of F(k), from the cache when available.
    std::shared_ptr<const LUFactorization> factorization_at(Cplx k) const {
        const detail::KeyBits key = detail::key_of(k);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            const auto it = map_.find(key);
            if (it != map_.end()) {
                order_.splice(order_.begin(), order_, it->second.order_it);
                return it->second.factor;
            }
        }
        auto factor = std::make_shared<LUFactorization>(lu_factor(nep_(k)));
        std::lock_guard<std::mutex> lock(mutex_);
        const auto it = map_.find(key);
        if (it != map_.end()) return it->second.factor;  // raced; keep the existing one
        order_.push_front(key);
        map_[key] = Entry{factor, order_.begin()};
        if (map_.size() > capacity_) {
            map_.erase(order_.back());
            order_.pop_back();
        }
        return factor;
    }

private:
    struct Entry {
        std::shared_ptr<const LUFactorization> factor;
        std::list<detail::KeyBits>::iterator order_it;
    };

    MatrixFunction nep_;
    std::uint64_t seed_;
    std::size_t capacity_;
    CVector u_, v_;
    mutable std::mutex mutex_;
    mutable std::list<detail::KeyBits> order_;
    mutable std::unordered_map<detail::KeyBits, Entry, detail::KeyBitsHash> map_;
};

/// Samples of S at the requested points. Points where F(k) is exactly
/// singular cannot be sampled; they are skipped and reported.
struct SampleSet {
    std::vector<aaa::SamplePoint> samples;
    std::vector<Cplx> skipped;
};

/// Evaluates S at each point; evaluations are independent and run on
/// `threads` workers when threads > 1 (the result is identical either way).
inline SampleSet sample_resolvent(const ScalarizedResolvent& s, const std::vector<Cplx>& points,
                                  int threads = 1) {
    std::vector<std::pair<Cplx, bool>> raw(points.size());
    const auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                raw[i] = {s(points[i]), true};
            } catch (const SingularMatrixError&) {
                raw[i] = {Cplx(0.0), false};
            }
        }
    };
    if (threads <= 1 || points.size() < 2) {
        work(0, points.size());
    } else {
        const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(threads), points.size());
        std::vector<std::thread> pool;
        const std::size_t chunk = (points.size() + nw - 1) / nw;
        for (std::size_t w = 0; w < nw; ++w) {
            const std::size_t b = w * chunk;
            const std::size_t e = std::min(points.size(), b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (std::thread& t : pool) t.join();
    }

    SampleSet out;
    out.samples.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (raw[i].second)
            out.samples.push_back({points[i], raw[i].first});
        else
            out.skipped.push_back(points[i]);
    }
    return out;
}

}  // namespace polefind::nep

#endif  // POLEFIND_NEP_RESOLVENT_HPP
