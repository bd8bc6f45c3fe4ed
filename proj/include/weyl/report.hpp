#pragma once

#include <string>
#include <vector>

namespace weyl {

// Pass/fail list produced by the verification entry points.
struct Report {
    struct Check {
        std::string name;
        bool ok = false;
        std::string detail;
    };
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string detail = "")
    {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    int passed() const
    {
        int n = 0;
        for (const auto& c : checks) n += c.ok;
        return n;
    }
    int failed() const { return static_cast<int>(checks.size()) - passed(); }
    void merge(const Report& other)
    {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

} // namespace weyl
