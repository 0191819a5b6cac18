#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ellroot/catalog.hpp"
#include "ellroot/report.hpp"

namespace ellroot {

// Every corpus check for one curve; computation errors become a failed check.
Report verify_curve(const CurveRecord& rec);
// One block per curve followed by a summary block.
std::vector<Report> verify_corpus(const std::vector<CurveRecord>& records);
// Blocks separated by blank lines.
std::string render(const std::vector<Report>& blocks);

// args excludes the program name. Exit 0: all checks pass, 1: a check failed
// or a computation raised, 2: usage or catalog error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellroot
