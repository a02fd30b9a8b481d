#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chargealg {

/// `chargealg analyze FILE [--report text|json] [--numeric] [--dt X]
/// [--horizon T] [--seed N] [--bind k=v,...] [--tolerance X] [--samples N]`
///
/// Returns 0 when every enabled check passes, 1 on rejection or bad input,
/// 2 on an internal inconsistency.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace chargealg
