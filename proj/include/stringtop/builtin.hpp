#pragma once

#include <span>
#include <string_view>

namespace stringtop::builtin {

struct Source {
  std::string_view name;  // file stem under data/
  std::string_view text;
};

/// Reference dialgebras, identical to the files shipped in data/.
std::span<const Source> dialgebras();
/// Sample bordisms.
std::span<const Source> bordisms();
/// Sample graphs.
std::span<const Source> graphs();

/// Throws stringtop::Error for unknown names.
std::string_view dialgebra_text(std::string_view name);

}  // namespace stringtop::builtin
