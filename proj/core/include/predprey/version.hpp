#ifndef PREDPREY_VERSION_HPP
#define PREDPREY_VERSION_HPP

namespace predprey {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
