#ifndef MMS_CLI_HPP
#define MMS_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mms/diagram.hpp"
#include "mms/ideal.hpp"
#include "mms/polynomial.hpp"
#include "mms/resolution.hpp"

namespace mms::cli
{

using json = nlohmann::ordered_json;

// ideal    ::= "0" | monomial ("," monomial)*
// monomial ::= "1" | factor (("*")? factor)*
// factor   ::= NAME ("^" UINT)?
// NAME     ::= letter digit*
// Whitespace is ignored; one pair of enclosing parentheses is allowed.
MonomialIdeal parse_ideal(std::string_view text, const VariableList &vars);

// 2D: one line per row, top row first, each box "[]". 3D: layers z = 0, 1,
// ... each introduced by "k=<z>:". Throws DimensionError otherwise.
std::string render_diagram(const Diagram &d);

// Everything a subcommand produces. Serialization is deterministic: keys keep
// insertion order and all numbers are exact.
struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::vector<std::string> warnings;
    std::vector<std::string> lines; // text-mode body

    json to_json() const;
    std::string to_text() const;
};

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json exact_json(const Integer &z);
// Integral rationals as exact_json of the integer, others as "p/q".
json exact_json(const Rational &q);
json polynomial_json(const ExactPolynomial &p);
json diagram_json(const Diagram &d);
json pair_json(const DegreePair &p);

// Exit codes: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace mms::cli

#endif
