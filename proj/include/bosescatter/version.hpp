#ifndef BOSESCATTER_VERSION_HPP
#define BOSESCATTER_VERSION_HPP

namespace bosescatter {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
