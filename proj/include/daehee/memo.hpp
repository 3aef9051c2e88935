/**
 * @file memo.hpp
 * @brief Process-wide memo tables and the fault-injection registry.
 *
 * All caches in the library are Memo instances. They are keyed by a small
 * tuple and guarded by a mutex; values are computed outside the lock so a
 * computation may consult other caches. Every cache is tied to a global
 * epoch: installing or removing an injected fault bumps the epoch, and each
 * Memo drops its contents the next time it is touched. Values computed under
 * a stale epoch are never inserted.
 */
#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "rat.hpp"

namespace daehee {

namespace detail {

inline std::atomic<std::uint64_t>& cache_epoch() {
    static std::atomic<std::uint64_t> epoch{0};
    return epoch;
}

}  // namespace detail

template <class Key, class Value>
class Memo {
public:
    template <class Compute>
    Value get(const Key& key, Compute&& compute) {
        std::uint64_t seen;
        {
            std::lock_guard lock(mu_);
            seen = sync();
            if (auto it = map_.find(key); it != map_.end()) return it->second;
        }
        Value value = compute();
        std::lock_guard lock(mu_);
        if (sync() == seen) map_.emplace(key, value);
        return value;
    }

    void clear() {
        std::lock_guard lock(mu_);
        map_.clear();
    }

private:
    std::uint64_t sync() {
        const auto now = detail::cache_epoch().load(std::memory_order_acquire);
        if (now != epoch_) {
            map_.clear();
            epoch_ = now;
        }
        return now;
    }

    std::mutex mu_;
    std::uint64_t epoch_ = 0;
    std::map<Key, Value> map_;
};

/// Tables whose entries can be perturbed for harness-sensitivity testing.
enum class FaultTable {
    stirling1,   ///< unsigned first kind [n k]
    stirling2,   ///< unsigned second kind {n k}
    rstirling1,  ///< shifted r-Stirling first kind, entry (n, k) at given r
    rstirling2,  ///< shifted r-Stirling second kind
    bernoulli,   ///< Bernoulli number B_n
    harmonic,    ///< harmonic number H_n
    daehee1,     ///< constant term of D_n(x)
    daehee2,     ///< constant term of the second-kind polynomial
};

namespace fault {

namespace detail {

using FaultKey = std::tuple<FaultTable, int, int, int>;

struct Registry {
    std::mutex mu;
    std::map<FaultKey, Rat> deltas;
    std::atomic<bool> active{false};
};

inline Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace detail

/// Additive perturbation currently installed for the given entry, if any.
inline std::optional<Rat> delta(FaultTable table, int n, int k = 0, int r = 0) {
    auto& reg = detail::registry();
    if (!reg.active.load(std::memory_order_acquire)) return std::nullopt;
    std::lock_guard lock(reg.mu);
    auto it = reg.deltas.find({table, n, k, r});
    if (it == reg.deltas.end()) return std::nullopt;
    return it->second;
}

/// RAII perturbation of one table entry. While alive, every read of the entry
/// returns value + delta, and all derived caches are invalidated.
class ScopedCorruption {
public:
    ScopedCorruption(FaultTable table, int n, int k, int r, Rat delta_value)
        : key_{table, n, k, r} {
        auto& reg = detail::registry();
        {
            std::lock_guard lock(reg.mu);
            reg.deltas[key_] += delta_value;
            reg.active.store(true, std::memory_order_release);
        }
        ::daehee::detail::cache_epoch().fetch_add(1, std::memory_order_acq_rel);
    }

    ScopedCorruption(FaultTable table, int n, Rat delta_value)
        : ScopedCorruption(table, n, 0, 0, std::move(delta_value)) {}

    ScopedCorruption(const ScopedCorruption&) = delete;
    ScopedCorruption& operator=(const ScopedCorruption&) = delete;

    ~ScopedCorruption() {
        auto& reg = detail::registry();
        {
            std::lock_guard lock(reg.mu);
            reg.deltas.erase(key_);
            reg.active.store(!reg.deltas.empty(), std::memory_order_release);
        }
        ::daehee::detail::cache_epoch().fetch_add(1, std::memory_order_acq_rel);
    }

private:
    detail::FaultKey key_;
};

}  // namespace fault

}  // namespace daehee
