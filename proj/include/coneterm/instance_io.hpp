#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "coneterm/positivity.hpp"
#include "coneterm/system.hpp"

namespace coneterm {

/// Input error with a human-readable location (byte offset for JSON,
/// line/column for the loop DSL).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

/// Search-option overrides carried by an instance file; unset fields fall
/// back to defaults (and can in turn be overridden on the command line).
struct InstanceOptions {
    std::optional<long> max_degree;
    std::optional<Rational> box_lo, box_hi;
    std::optional<int> max_subdivision_depth;

    void apply(SearchConfig& cfg) const;
};

struct ParsedInstance {
    LoopSystem system;
    InstanceOptions options;
};

/*
 * JSON instance format (schema_version 1):
 *   {
 *     "d": 2, "k": 1, "n": 2,
 *     "matrices": [[["2","0"],["0","1/2"]]],
 *     "guard":    [["1","0"],["0","1"]],
 *     "options":  {"max_degree": 8, "box": ["1/2","2"]}
 *   }
 * All numeric entries are exact rational strings "p/q" (or "p"); decimal
 * notation is rejected.
 */
ParsedInstance parse_instance_json(const std::string& text);

/*
 * Loop DSL, e.g.
 *   while x1 >= 0 && x2 >= 0 do { x := [2,0;0,1/2] * x }
 * Grammar:
 *   program  := "while" guard "do" "{" update ("|" update)* "}"
 *   guard    := ineq ("&&" ineq)*
 *   ineq     := linexpr ">=" "0"
 *   linexpr  := term (("+"|"-") term)*
 *   term     := [rational "*"] var
 *   var      := "x" digit+
 *   update   := "x" ":=" "[" row (";" row)* "]" "*" "x"
 *   row      := rational ("," rational)*
 *   rational := ["-"] digit+ ["/" digit+]
 * Variables x1..xd determine d; every update matrix must be d x d.
 */
ParsedInstance parse_loop_dsl(const std::string& text);

/// Canonical JSON echo of a validated system (exact "p/q" strings).
nlohmann::json instance_to_json(const LoopSystem& sys);

/// Rebuilds a system from the instance echo inside a report.
LoopSystem instance_from_json(const nlohmann::json& j);

QVector vector_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const QVector& v);
QMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const QMatrix& m);

/// Shape-aware matrix encoding {"shape":[r,c],"entries":[...]} for trace
/// matrices, which may legitimately have zero rows (quotients onto R^0).
nlohmann::json shaped_matrix_to_json(const QMatrix& m);
QMatrix shaped_matrix_from_json(const nlohmann::json& j);

}  // namespace coneterm
