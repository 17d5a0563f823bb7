#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subpack {

enum class Errc {
  edge_out_of_range,
  self_loop,
  duplicate_edge,
  malformed_graph6,
  malformed_edge_list,
  empty_graph,
  not_subcubic,
  empty_sequence,
  not_nondecreasing,
  nonpositive,
  malformed_sequence,
  partial_coloring,
  class_out_of_range,
  too_large,
  budget,
  precondition,
  structure_violation,
  extension_stuck,
  not_in_class,
  construction_failed,
  unknown_fixture,
  unknown_class_tag,
  io,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::edge_out_of_range: return "EDGE_OUT_OF_RANGE";
    case Errc::self_loop: return "SELF_LOOP";
    case Errc::duplicate_edge: return "DUPLICATE_EDGE";
    case Errc::malformed_graph6: return "MALFORMED_GRAPH6";
    case Errc::malformed_edge_list: return "MALFORMED_EDGE_LIST";
    case Errc::empty_graph: return "EMPTY_GRAPH";
    case Errc::not_subcubic: return "NOT_SUBCUBIC";
    case Errc::empty_sequence: return "EMPTY";
    case Errc::not_nondecreasing: return "NOT_NONDECREASING";
    case Errc::nonpositive: return "NONPOSITIVE";
    case Errc::malformed_sequence: return "MALFORMED_SEQUENCE";
    case Errc::partial_coloring: return "PARTIAL_COLORING";
    case Errc::class_out_of_range: return "CLASS_OUT_OF_RANGE";
    case Errc::too_large: return "TOO_LARGE";
    case Errc::budget: return "BUDGET";
    case Errc::precondition: return "PRECONDITION";
    case Errc::structure_violation: return "STRUCTURE_VIOLATION";
    case Errc::extension_stuck: return "EXTENSION_STUCK";
    case Errc::not_in_class: return "NOT_IN_CLASS";
    case Errc::construction_failed: return "CONSTRUCTION_FAILED";
    case Errc::unknown_fixture: return "UNKNOWN_FIXTURE";
    case Errc::unknown_class_tag: return "UNKNOWN_CLASS_TAG";
    case Errc::io: return "IO";
  }
  return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace subpack
