#ifndef UNITRING_CLI_HPP
#define UNITRING_CLI_HPP

// Command-line frontend: the group/field mini-languages, seven verbs that
// each map onto one library operation, JSON reports on stdout and a short
// summary on stderr. Exit codes: 0 computed, 1 usage/parse/validation,
// 2 budget exceeded, 3 precondition violation.

#include "unitring/analysis.hpp"
#include "unitring/field_descriptor.hpp"
#include "unitring/group.hpp"
#include "unitring/structured.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace unitring {

// A parsed --group argument: either a plain finite group or a structured
// Z^k x| T input (from a JSON document).
struct ParsedGroup {
    GroupPtr finite;                           // set when the spec was finite
    std::optional<StructuredGroup> structured; // set when the spec was structured
    std::string text;                          // original spec text

    bool is_structured() const { return structured.has_value(); }
};

// Grammar: C<n>, D<n> (order 2n), K8, Q16, E2^<k>, S3, products with 'x'
// (e.g. K8xE2^2), or @file.json holding either {"table": [[...]], "names":
// [...]} or {"torsion": <spec or table>, "free_rank": k, "actions": [...]}.
ParsedGroup parse_group_spec(const std::string& text);

// Grammar: GF(p), GF(p^n), GF(p)(t), algcl(p); p must be prime.
FieldDescriptor parse_field_spec(const std::string& text);

// Full CLI entry point; streams are injectable for tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace unitring

#endif
