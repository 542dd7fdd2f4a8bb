#pragma once

#include <filesystem>
#include <iosfwd>

#include "seglab/field.hpp"

namespace seglab {

// "SEGFIELD 1" text snapshots. Values are written with 17 significant digits,
// so read(write(f)) == f bit for bit.
void write_snapshot(std::ostream& os, const MultiField& mf);
void write_snapshot(const std::filesystem::path& path, const MultiField& mf);
MultiField read_snapshot(std::istream& is);
MultiField read_snapshot(const std::filesystem::path& path);

}  // namespace seglab
