// JSON, DOT and CSV forms for graphs, labelings, outcomes and
// certificates. Key names are part of the file-format contract.

#ifndef ANTIMAGIC_IO_HPP
#define ANTIMAGIC_IO_HPP

#include "antimagic/constructions.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/search.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace antimagic {

// Malformed input; the message names the offending key.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws ParseError on syntax errors.
nlohmann::json parse_json_text(const std::string& text);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json labeling_to_json(const EdgeLabeling& l,
                                const std::string& graph_ref = {});
// Validates the label domain against g: duplicate, out-of-range and
// missing edge ids are reported by name.
EdgeLabeling labeling_from_json(const nlohmann::json& j, const Graph& g);

nlohmann::json certificate_to_json(const NonAntimagicCertificate& c);
nlohmann::json outcome_to_json(const ConstructionOutcome& o);

// DOT form: vertex label "role:weight" (bare id when the vertex has no
// role), one integer label per edge.
std::string to_dot(const Graph& g, const EdgeLabeling& l,
                   const std::string& name = "antimagic");

// CSV form of a labeled graph: header edge,u,v,label.
std::string labeled_csv(const Graph& g, const EdgeLabeling& l);

} // namespace antimagic

#endif
