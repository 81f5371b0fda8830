#ifndef TCL_CLI_REPORT_HPP
#define TCL_CLI_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "tcl/filtration.hpp"
#include "tcl/tight.hpp"

namespace tcl::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Text };

struct Report {
  Json spec = Json::object();
  Json ring = Json::object();
  Json results = Json::object();
  Json caveats = Json::array();
  std::optional<double> timing_ms;
  bool checks_passed = true;

  void caveat(const std::string& text);
};

inline constexpr int kSchemaVersion = 1;

Json ring_json(const HypersurfaceRing& ring);
Json closure_json(const ClosureResult& c);
Json certificate_json(const Certificate& c);
Json slice_json(const SliceResult& s, const HypersurfaceRing& ring);
Json identity_json(const IdentityCheckReport& rep);
Json fit_json(const FitResult& fit);
Json huckaba_marley_json(const HuckabaMarleyResult& hm);
Json reduction_json(const ReductionData& data);

Json to_json(const Report& report);
// JSON output is byte-stable for equal reports; text is a human summary.
std::string emit_report(const Report& report, Format format);

}  // namespace tcl::cli

#endif  // TCL_CLI_REPORT_HPP
