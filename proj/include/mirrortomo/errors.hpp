#pragma once

#include <stdexcept>
#include <string>

namespace mtomo {

enum class errc {
  degenerate_span,
  line_not_on_plane,
  degenerate_input,
  unbounded_projection,
  empty_operand,
  point_outside_body,
  degenerate_chord,
  construction_breakdown,
  point_outside_circle,
  not_orthogonal,
  bad_parameters,
  bad_configuration,
  parse_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::degenerate_span: return "DegenerateSpan";
    case errc::line_not_on_plane: return "LineNotOnPlane";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::unbounded_projection: return "UnboundedProjection";
    case errc::empty_operand: return "EmptyOperand";
    case errc::point_outside_body: return "PointOutsideBody";
    case errc::degenerate_chord: return "DegenerateChord";
    case errc::construction_breakdown: return "ConstructionBreakdown";
    case errc::point_outside_circle: return "PointOutsideCircle";
    case errc::not_orthogonal: return "NotOrthogonal";
    case errc::bad_parameters: return "BadParameters";
    case errc::bad_configuration: return "BadConfiguration";
    case errc::parse_error: return "ParseError";
  }
  return "Error";
}

}  // namespace mtomo
