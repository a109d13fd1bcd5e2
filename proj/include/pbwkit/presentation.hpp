#pragma once

#include "pbwkit/free_algebra.hpp"
#include "pbwkit/scalar.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pbwkit {

struct Presentation {
    Field field;
    std::vector<std::string> generators;
    std::vector<Element> ambient_relations;
    std::vector<Element> deformation;
    int max_degree = 8;
    std::optional<int> tor_bound;

    std::size_t g() const { return generators.size(); }
};

bool operator==(const Presentation& a, const Presentation& b);

// Element text: identifiers are generators, `*` concatenates, `+`/`-` are
// linear, coefficients are integers or a/b, `1` is the unit word.
// Errors are reported relative to the start of `text` (line 1, column 1).
Element parse_element(std::string_view text, const std::vector<std::string>& generators, const Field& field);

Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);
std::string print_presentation(const Presentation& p);
// Checks the invariants of a presentation built in code; parse_presentation
// applies the same checks.
void validate_presentation(const Presentation& p);

// "Q", "Fp(p)" or "Fp:p".
Field parse_field(std::string_view text);
// Reduces every coefficient into `field`; a rational presentation may move to
// any F_p, an F_p presentation only to itself.
Presentation change_field(const Presentation& p, const Field& field);

} // namespace pbwkit
