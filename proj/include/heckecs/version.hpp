#pragma once

#ifndef HECKECS_VERSION
#define HECKECS_VERSION "0.1.0"
#endif

namespace heckecs {
inline constexpr const char* kVersion = HECKECS_VERSION;
}
