#pragma once

#include <string>
#include <vector>

namespace hvml
{

struct CheckResult
{
    std::string name;
    bool passed = true;
    std::string witness; // empty when passed
};

// Ordered list of named pass/fail checks. Every verifier in the library
// returns one of these; the CLI prints them as `CHECK <name> PASS|FAIL ...`.
class Report
{
    std::vector< CheckResult > _checks;

public:
    void add( std::string name, bool passed, std::string witness = {} );

    // Appends all checks of `other`, prefixing names with `prefix.` when given.
    void merge( const Report& other, const std::string& prefix = {} );

    [[nodiscard]] bool passed() const;
    [[nodiscard]] const std::vector< CheckResult >& checks() const { return _checks; }

    // First check with this name, or nullptr.
    [[nodiscard]] const CheckResult* find( const std::string& name ) const;
    [[nodiscard]] bool passed( const std::string& name ) const;

    [[nodiscard]] std::string machine_lines() const;
};

} // namespace hvml
