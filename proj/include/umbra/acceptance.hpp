#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "umbra/numerics.hpp"

// Named verification suites reproducing the toolkit's headline identities
// and figure-level data against independent oracles.  Shared between the
// test suite and the CLI `check` subcommand.

namespace umbra {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // worst residual / tolerance, notes
};

std::vector<std::string> acceptance_names();

// Runs one named suite ("all" handled by the caller).
CheckResult run_acceptance_check(const std::string& name);

// Runs every suite, streaming one "PASS/FAIL name: detail" line per suite
// to `progress` when non-null.
std::vector<CheckResult> run_acceptance(std::ostream* progress);

// Reference matrix exponentials by scaling-and-squaring Taylor summation;
// independent of the Cayley-Hamilton closed forms they are used to check.
namespace oracle {
MatC2 expm_taylor(const MatC2& M, double t);
MatC3 expm_taylor(const MatC3& M, double t);
}  // namespace oracle

}  // namespace umbra
