#pragma once

#include "kmlab/errors.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>

namespace kmlab {

// Global guardrail on monomial operations. The permutation sums grow like
// (p!)^2q; a clear error beats an OOM kill.
class TermBudget {
  public:
    static std::int64_t limit() { return instance().limit_; }
    static void set_limit(std::int64_t n) { instance().limit_ = n; }
    static void reset() { instance().used_ = 0; }
    static std::int64_t used() { return instance().used_; }

    static void charge(std::int64_t n) {
        auto& b = instance();
        b.used_ += n;
        if (b.used_ > b.limit_)
            throw ResourceLimit("term budget exceeded: " + std::to_string(b.used_) +
                                " > " + std::to_string(b.limit_));
    }

  private:
    static TermBudget& instance() {
        static TermBudget b;
        return b;
    }
    TermBudget() {
        if (const char* env = std::getenv("KMLAB_TERM_BUDGET")) limit_ = std::atoll(env);
    }
    std::int64_t limit_ = 5'000'000;
    std::int64_t used_ = 0;
};

}  // namespace kmlab
