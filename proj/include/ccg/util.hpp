#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace ccg {

struct TimeoutError : std::runtime_error {
    TimeoutError() : std::runtime_error("operation exceeded its deadline") {}
};

// Thrown by operations that require a minimum clique cover made of maximal
// cliques where no three cliques share a vertex, when the graph has none.
struct NotSimplyCoverable : std::runtime_error {
    NotSimplyCoverable()
        : std::runtime_error(
              "graph has no minimum cover of maximal cliques with simple intersection") {}
};

// Cooperative deadline for the exact searches.  Long loops call check()
// every few thousand iterations; a default-constructed Deadline never fires.
class Deadline {
public:
    Deadline() = default;

    static Deadline after(std::chrono::milliseconds ms) {
        Deadline d;
        d.at_ = std::chrono::steady_clock::now() + ms;
        return d;
    }

    bool expired() const {
        return at_ && std::chrono::steady_clock::now() >= *at_;
    }

    void check() const {
        if (expired()) throw TimeoutError{};
    }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

// Helper for loops: calls deadline->check() once per 4096 ticks.
class DeadlineTicker {
public:
    explicit DeadlineTicker(const Deadline* d) : d_(d) {}
    void tick() {
        if (d_ && (++count_ & 0xfff) == 0) d_->check();
    }

private:
    const Deadline* d_;
    unsigned count_ = 0;
};

}  // namespace ccg
