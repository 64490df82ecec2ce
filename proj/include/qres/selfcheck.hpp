#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qres::selfcheck {

enum class Scale { Tiny, Small, Full };
Scale parse_scale(const std::string& text);
// Full size of a suite shrunk to the scale, never below one.
std::size_t scaled(std::size_t full, Scale scale);

struct SuiteResult {
    std::size_t id = 0;
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    // First failure, or counters describing what was exercised.
    std::string note;

    bool passed() const { return failures == 0 && instances > 0; }
};

struct Suite {
    std::size_t id;
    std::string name;
    std::function<SuiteResult(Scale, std::uint64_t)> run;
};

// The numbered acceptance suites followed by extra invariant checks.
const std::vector<Suite>& acceptance_suites();
const std::vector<Suite>& extra_suites();

}  // namespace qres::selfcheck
