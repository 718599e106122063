#pragma once

#include <cstdint>
#include <string>

#include "defo/report.hpp"

namespace defo {

// Verification subcommands. Each returns a deterministic Report; input
// problems throw ParseError/DomainError (mapped to usage errors by the CLI).

Report cmd_verify_cocycles(int n, int max_degree, int trials, std::uint64_t seed);
Report cmd_mc2(int n, std::uint64_t seed);
Report cmd_relations(int n, const std::string& params_json);
Report cmd_defect(int n, const std::string& params_json, const std::string& x_expr,
                  const std::string& y_expr);
Report cmd_obstruction(int n, int k, int shift, int jet_bound, int order_bound);
Report cmd_examples(int n, const std::string& which);
Report cmd_uniform(int n);

}  // namespace defo
