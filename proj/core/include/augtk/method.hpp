#pragma once

#include <string_view>
#include <vector>

namespace augtk {

/// The eight adaptation methods of the comparison protocol.
enum class Method {
  src_only,
  tgt_only,
  all,
  weighted,
  pred,
  lin_int,
  prior,
  augment,
};

/// Display names: SrcOnly, TgtOnly, All, Weighted, Pred, LinInt, Prior,
/// Augment.
std::string_view method_name(Method m);

/// Parses a display name (case-sensitive).  Unknown name -> error.
Method method_from_name(std::string_view name);

/// All methods in display order.
const std::vector<Method>& all_methods();

}  // namespace augtk
