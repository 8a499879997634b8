#pragma once

#include <string>
#include <vector>

namespace propcount {

// One named exact comparison; pass iff the two rendered sides are identical.
struct Check {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

inline Check make_check(std::string name, std::string lhs, std::string rhs) {
    bool ok = lhs == rhs;
    return Check{std::move(name), std::move(lhs), std::move(rhs), ok};
}

struct Report {
    std::vector<Check> checks;

    void add(std::string name, std::string lhs, std::string rhs) {
        checks.push_back(make_check(std::move(name), std::move(lhs), std::move(rhs)));
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

}  // namespace propcount
