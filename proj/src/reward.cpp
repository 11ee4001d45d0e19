#include "gridcraft/reward.hpp"

#include <string>

#include "gridcraft/errors.hpp"

namespace gridcraft {

std::string_view to_string(StructureEvent event) {
  switch (event) {
    case StructureEvent::Placed: return "placed";
    case StructureEvent::Broken: return "broken";
    case StructureEvent::None: break;
  }
  return "none";
}

StructureEvent structure_event_from_string(std::string_view name) {
  if (name == "placed") return StructureEvent::Placed;
  if (name == "broken") return StructureEvent::Broken;
  if (name == "none") return StructureEvent::None;
  throw ParseError("unknown structure event '" + std::string(name) + "'");
}

}  // namespace gridcraft
