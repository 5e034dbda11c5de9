// Internal: 128-bit unsigned integer for overflow-free 64-bit products.

#pragma once

namespace wexc::detail {

__extension__ typedef unsigned __int128 u128;

}  // namespace wexc::detail
