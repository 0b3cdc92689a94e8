#ifndef HELMFD_IO_HPP
#define HELMFD_IO_HPP

#include <string>

namespace helmfd {

/// Shortest decimal representation that round-trips to the same double
/// (std::to_chars); "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double v);

}  // namespace helmfd

#endif  // HELMFD_IO_HPP
