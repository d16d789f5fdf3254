#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "markov/family.hpp"
#include "markov/report.hpp"
#include "markov/triple_tree.hpp"

namespace markov::cli {

inline constexpr const char* kSchema = "markov-lab/1";

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

using Json = nlohmann::ordered_json;

/// Every integer is emitted as a decimal string.
Json to_json(const Seq& s);
Json to_json(const IntTriple& t);
Json to_json(const VerificationReport& r);
Json to_json(const Collision& c);

VerificationReport report_from_json(const Json& j);

/// "[a1; a2: a3: ...]"
std::string cf_text(const Seq& s);

/// Entry point shared by the executable and the tests. argv[0] is the
/// program name. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace markov::cli
