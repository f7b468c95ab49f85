#include "relspin/cli/format.hpp"

#include <charconv>
#include <system_error>

namespace relspin::cli {

std::string format_real(real v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (res.ec != std::errc{})
    {
        return "nan";
    }
    return std::string(buf, res.ptr);
}

std::string csv_row(const std::vector<real>& values)
{
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        if (i > 0)
        {
            line += ',';
        }
        line += format_real(values[i]);
    }
    line += '\n';
    return line;
}

} // namespace relspin::cli
