#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gsv {

// Error taxonomy; `kind` maps onto the CLI exit codes.
enum class ErrKind {
    Parse,       // exit 2
    Validation,  // exit 3
    Budget,      // exit 4
    Certificate, // exit 5
    Io,          // exit 6
    Internal,    // exit 1
};

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, std::string code, std::string msg)
        : std::runtime_error(code + ": " + msg), kind_(kind), code_(std::move(code)) {}
    ErrKind kind() const { return kind_; }
    const std::string& code() const { return code_; }

private:
    ErrKind kind_;
    std::string code_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& code, const std::string& msg) {
    throw Error(kind, code, msg);
}

class Timer {
public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    int64_t ms() const {
        auto dt = std::chrono::steady_clock::now() - t0_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

// Runs fn(i) for i in [0, n). Work items must be independent; each result goes
// into its own slot, so the outcome does not depend on the thread count.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nt = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errs(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= n) break;
                    fn(i);
                }
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

inline uint64_t checked_add_u32(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    if (s > 0xffffffffull) fail(ErrKind::Budget, "exponent-overflow", "exponent arithmetic exceeded 32 bits");
    return s;
}

} // namespace gsv
