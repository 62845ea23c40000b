#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "symcube/partition.hpp"
#include "symcube/plethysm.hpp"
#include "symcube/waring.hpp"

namespace symcube {

using Json = nlohmann::json;

// Partitions are arrays of integers, weights {"n", "entries"}, templates
// {"prefix", "suffix"}. Gaussian rationals are {"re": "p/q", "im": "p/q"};
// Laurent polynomials are {"eps": {"<degree>": <gaussian>, ...}}.

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json weight_to_json(const GLWeight& w);
GLWeight weight_from_json(const Json& j);

Json template_to_json(const WeightTemplate& t);
WeightTemplate template_from_json(const Json& j);

Json gaussian_to_json(const Gaussian& g);
Gaussian gaussian_from_json(const Json& j);

Json laurent_to_json(const Laurent& l);
Laurent laurent_from_json(const Json& j);  // also accepts a plain Gaussian

Json cubic_form_to_json(const CubicForm& f);
CubicForm cubic_form_from_json(const Json& j);

/// Certificate files: {"target": <cubic form>, "kind": "rank"|"border",
/// "terms": [{"coeff": ..., "form": [...]}]}.
using AnyCertificate = std::variant<WaringCertificate, EpsilonFamily>;
struct CertificateFile {
    CubicForm target;
    AnyCertificate certificate;

    bool is_border() const { return std::holds_alternative<EpsilonFamily>(certificate); }
    std::size_t term_count() const;
};

Json certificate_file_to_json(const CertificateFile& c);
CertificateFile certificate_file_from_json(const Json& j);

/// Throws parse_error on malformed JSON text.
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

/// Annotated decomposition per the documented schema; dimensions are
/// decimal strings so consumers never face integer-width questions.
Json decomposition_to_json(const AnnotatedDecomposition& d);

/// Weight or template in CLI syntax: "[2,1,0*,-1,-2]" has a variable
/// zero block, "[1,1,-1,-1]" is a concrete weight.
std::variant<GLWeight, WeightTemplate> parse_weight_or_template(const std::string& text,
                                                                int n);

} // namespace symcube
