#pragma once

#include <string_view>
#include <vector>

namespace crossmap::oeis::detail {

struct BundledBfile {
  std::string_view id;
  std::string_view text;
};

// Generated at configure time from data/oeis/b*.txt.
const std::vector<BundledBfile>& bundled_bfiles();

}  // namespace crossmap::oeis::detail
