#pragma once

#include "operant/bezout.hpp"
#include "operant/network.hpp"
#include "operant/ring_matrix.hpp"

#include <string>

namespace operant {

// JSON text serialization for the core types.  indent < 0 emits compact
// one-line documents; indent >= 0 pretty-prints.  Parsers throw ParseError
// with the offending location; unknown object keys are rejected so malformed
// or unsupported inputs fail loudly instead of being silently ignored.

std::string poly_to_json(const Poly& p, int indent = -1);
Poly poly_from_json(const std::string& text);

std::string ratfun_to_json(const RatFun& f, int indent = -1);
RatFun ratfun_from_json(const std::string& text);

std::string sigma_to_json(const SigmaSpec& s, int indent = -1);
SigmaSpec sigma_from_json(const std::string& text);

std::string tag_to_json(const RingTag& t, int indent = -1);
RingTag tag_from_json(const std::string& text);

std::string trig_to_json(const TrigElement& e, int indent = -1);
TrigElement trig_from_json(const std::string& text);

std::string matrix_to_json(const RingMatrix& m, int indent = -1);
RingMatrix matrix_from_json(const std::string& text);

std::string network_to_json(const NetworkSpec& spec, int indent = -1);
NetworkSpec network_from_json(const std::string& text);

std::string certificate_to_json(const BezoutCertificate& cert, int indent = -1);

// Input document for the pair commands: {"p": <element>, "q": <element>}
// with matching tags.
struct ElementPair {
  TrigElement p, q;
};
ElementPair element_pair_from_json(const std::string& text);

}  // namespace operant
