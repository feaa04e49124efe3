#ifndef CSSPROP_PACKED_HPP
#define CSSPROP_PACKED_HPP

// Packed vector kernels for codeword enumeration.
//
// GF(2): one bit per coordinate.
// GF(3): two bit planes, lo = "symbol is 1", hi = "symbol is 2", stored as
//        [lo words..., hi words...].
// other: one 64-bit slot per coordinate holding the field element.
//
// Every Ops type exposes stride() (words per vector), add(dst, src),
// weight(v) and pack(symbols, out).

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gf.hpp"

namespace cssprop {

namespace detail {

template <std::size_t W>
struct Gf2Ops {
    std::size_t words = W;

    std::size_t stride() const {
        if constexpr (W != 0) return W;
        else return words;
    }
    void add(std::uint64_t* dst, const std::uint64_t* src) const {
        for (std::size_t i = 0; i < stride(); ++i) dst[i] ^= src[i];
    }
    unsigned weight(const std::uint64_t* v) const {
        unsigned w = 0;
        for (std::size_t i = 0; i < stride(); ++i) w += static_cast<unsigned>(std::popcount(v[i]));
        return w;
    }
    void pack(std::span<const elem_t> symbols, std::uint64_t* out) const {
        std::fill(out, out + stride(), 0);
        for (std::size_t j = 0; j < symbols.size(); ++j)
            if (symbols[j]) out[j / 64] |= std::uint64_t{1} << (j % 64);
    }
};

template <std::size_t W>
struct Gf3Ops {
    std::size_t words = W;  // per plane

    std::size_t plane() const {
        if constexpr (W != 0) return W;
        else return words;
    }
    std::size_t stride() const { return 2 * plane(); }
    void add(std::uint64_t* dst, const std::uint64_t* src) const {
        const std::size_t P = plane();
        for (std::size_t i = 0; i < P; ++i) {
            const std::uint64_t a1 = dst[i], a2 = dst[P + i];
            const std::uint64_t b1 = src[i], b2 = src[P + i];
            const std::uint64_t t = (a1 | b2) ^ (a2 | b1);
            dst[i] = (a2 | b2) ^ t;
            dst[P + i] = (a1 | b1) ^ t;
        }
    }
    unsigned weight(const std::uint64_t* v) const {
        const std::size_t P = plane();
        unsigned w = 0;
        for (std::size_t i = 0; i < P; ++i) w += static_cast<unsigned>(std::popcount(v[i] | v[P + i]));
        return w;
    }
    void pack(std::span<const elem_t> symbols, std::uint64_t* out) const {
        const std::size_t P = plane();
        std::fill(out, out + stride(), 0);
        for (std::size_t j = 0; j < symbols.size(); ++j) {
            if (symbols[j] == 1) out[j / 64] |= std::uint64_t{1} << (j % 64);
            else if (symbols[j] == 2) out[P + j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
};

struct GenericOps {
    const FieldSpec* field = nullptr;
    std::size_t n = 0;

    std::size_t stride() const { return n; }
    void add(std::uint64_t* dst, const std::uint64_t* src) const {
        for (std::size_t i = 0; i < n; ++i)
            if (src[i]) dst[i] = field->add(static_cast<elem_t>(dst[i]), static_cast<elem_t>(src[i]));
    }
    unsigned weight(const std::uint64_t* v) const {
        unsigned w = 0;
        for (std::size_t i = 0; i < n; ++i) w += (v[i] != 0);
        return w;
    }
    void pack(std::span<const elem_t> symbols, std::uint64_t* out) const {
        for (std::size_t j = 0; j < n; ++j) out[j] = symbols[j];
    }
};

/// Calls fn with the Ops instance suited to (field, n).
template <class Fn>
decltype(auto) with_ops(const FieldSpec& f, std::size_t n, Fn&& fn) {
    const std::size_t words = (n + 63) / 64;
    if (f.q() == 2) {
        switch (words) {
            case 1: return fn(Gf2Ops<1>{});
            case 2: return fn(Gf2Ops<2>{});
            case 3: return fn(Gf2Ops<3>{});
            case 4: return fn(Gf2Ops<4>{});
            default: return fn(Gf2Ops<0>{words});
        }
    }
    if (f.q() == 3) {
        switch (words) {
            case 1: return fn(Gf3Ops<1>{});
            case 2: return fn(Gf3Ops<2>{});
            default: return fn(Gf3Ops<0>{words});
        }
    }
    return fn(GenericOps{&f, n});
}

/// Flat storage for packed vectors of one Ops type.
template <class Ops>
class PackedRows {
public:
    explicit PackedRows(const Ops& ops) : ops_(ops) {}

    std::size_t size() const { return ops_.stride() ? data_.size() / ops_.stride() : 0; }
    const std::uint64_t* operator[](std::size_t r) const { return data_.data() + r * ops_.stride(); }
    std::uint64_t* operator[](std::size_t r) { return data_.data() + r * ops_.stride(); }

    void push(std::span<const elem_t> symbols) {
        const std::size_t at = data_.size();
        data_.resize(at + ops_.stride());
        ops_.pack(symbols, data_.data() + at);
    }

    std::uint64_t* push_zero() {
        data_.resize(data_.size() + ops_.stride(), 0);
        return data_.data() + data_.size() - ops_.stride();
    }

private:
    Ops ops_;
    std::vector<std::uint64_t> data_;
};

}  // namespace detail

/// Worker count: explicit request, else CSSPROP_THREADS, else hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("CSSPROP_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(task) for task in [0, count) on up to `threads` workers.
template <class Fn>
void run_tasks(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t t = 0; t < count; ++t) fn(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        const std::size_t workers = std::min<std::size_t>(threads, count);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (std::size_t t = next.fetch_add(1); t < count; t = next.fetch_add(1)) fn(t);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(count);
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace cssprop

#endif
