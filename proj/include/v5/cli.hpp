#pragma once

#include <string>
#include <vector>

#include "v5/io.hpp"

namespace v5 {

/// A response envelope plus the process exit code it implies:
/// 0 success, 2 contract violation, 3 unsupported decision.
struct RunOutcome {
  Json response;
  int exit_code = 0;
};

/// Names of all dispatchable commands, dot-joined ("conic.solve").
std::vector<std::string> command_names();

/// Runs one request envelope {"command": ..., "payload": {...},
/// "version": "1"?}.  Never throws; failures become error/unsupported
/// responses with the matching exit code.
RunOutcome run_request(const Json& request);

/// Runs an array of request envelopes; the response is the array of the
/// individual responses and the exit code is the most severe one
/// (2 over 3 over 0).
RunOutcome run_batch(const Json& requests);

}  // namespace v5
