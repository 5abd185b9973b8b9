#pragma once

#include <string>
#include <vector>

namespace liebialg {

/// One named verification check with an optional witness / value payload.
struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when passing
    std::string value;    // optional reported quantity, e.g. "t= -1"
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    void add(const std::string& name, bool pass, const std::string& witness = "",
             const std::string& value = "") {
        checks.push_back(Check{name, pass, witness, value});
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    int exit_code() const { return all_pass() ? 0 : 1; }
};

}  // namespace liebialg
