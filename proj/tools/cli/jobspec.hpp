#ifndef TCL_CLI_JOBSPEC_HPP
#define TCL_CLI_JOBSPEC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcl/errors.hpp"
#include "tcl/graded_ring.hpp"

namespace tcl::cli {

// Position of a value in the job file, 1-based.
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

class SpecError : public InputError {
 public:
  SpecError(const std::string& what, SourcePos pos)
      : InputError("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + what),
        pos_(pos) {}
  SourcePos pos() const noexcept { return pos_; }

 private:
  SourcePos pos_;
};

struct RingBlock {
  std::uint32_t p = 0;
  // Fermat form.
  std::optional<unsigned> r;
  std::optional<unsigned> d;
  // General form.
  std::vector<std::string> vars;
  std::optional<std::string> relation;
  SourcePos relation_pos;

  bool is_fermat() const noexcept { return r.has_value(); }
};

struct IdealBlock {
  std::string name;
  std::vector<std::string> generators;
  std::vector<SourcePos> positions;  // of each generator's opening quote
};

struct JobSpec {
  RingBlock ring;
  std::vector<IdealBlock> ideals;

  const IdealBlock* find_ideal(std::string_view name) const;
};

// Sectioned key-value job file:
//
//   [ring]            p = 7   r = 3   d = 2
//                     or: p = 7   vars = ["x", "y", "z"]   relation = "x^3+y^3+z^3"
//   [ideal.J]         generators = ["x1", "x2"]
//
// One key per line, '#' starts a comment. Throws SpecError with a position.
JobSpec parse_job_spec(std::string_view text);

HypersurfaceRing build_ring(const RingBlock& block);
// Parses every generator in `ring`; polynomial errors are reported at their
// position in the job file.
RIdeal build_ideal(const HypersurfaceRing& ring, const IdealBlock& block);

}  // namespace tcl::cli

#endif  // TCL_CLI_JOBSPEC_HPP
