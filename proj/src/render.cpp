#include "gsc/render.hpp"

#include <fstream>

#include "gsc/errors.hpp"

namespace gsc {

std::string render_pgm(const SequenceSpec& spec, int n, const EnumerationOptions& options) {
  const auto width = level_width_checked(spec, n);
  if (width > kMaxImageSide)
    throw CapacityError("image side " + std::to_string(width) + " exceeds " + std::to_string(kMaxImageSide));
  const auto sets = materialize(spec, n, options);

  const std::string side = std::to_string(width);
  std::string out = "P5\n" + side + " " + side + "\n255\n";
  const auto header = out.size();
  out.resize(header + width * width, '\0');
  for (const auto& c : sets.white().cells()) out[header + (width - 1 - c.y) * width + c.x] = '\xff';
  return out;
}

void render(const SequenceSpec& spec, int n, const std::string& path, const EnumerationOptions& options) {
  const auto bytes = render_pgm(spec, n, options);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace gsc
