#include "gridcarbon/timestamp.hpp"

#include "gridcarbon/error.hpp"

#include <charconv>
#include <cstdio>

namespace gridcarbon
{

namespace
{

bool read_int(std::string_view text, std::size_t pos, std::size_t len, int& out)
{
    if (pos + len > text.size())
    {
        return false;
    }
    char const* first = text.data() + pos;
    char const* last = first + len;
    for (char const* p = first; p != last; ++p)
    {
        if (*p < '0' || *p > '9')
        {
            return false;
        }
    }
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

[[noreturn]] void bad_timestamp(std::string_view text, char const* why)
{
    throw Error(
        ErrorKind::ParseError,
        "invalid timestamp '" + std::string(text) + "': " + why
    );
}

} // namespace

Timestamp parse_hour_timestamp(std::string_view text)
{
    // YYYY-MM-DDTHH:MM:SS[Z]
    if (text.size() != 19 && !(text.size() == 20 && text.back() == 'Z'))
    {
        bad_timestamp(text, "expected YYYY-MM-DDTHH:00:00Z");
    }
    if (text[4] != '-' || text[7] != '-' || (text[10] != 'T' && text[10] != ' ')
        || text[13] != ':' || text[16] != ':')
    {
        bad_timestamp(text, "expected YYYY-MM-DDTHH:00:00Z");
    }
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    if (!read_int(text, 0, 4, y) || !read_int(text, 5, 2, mo)
        || !read_int(text, 8, 2, d) || !read_int(text, 11, 2, h)
        || !read_int(text, 14, 2, mi) || !read_int(text, 17, 2, s))
    {
        bad_timestamp(text, "non-numeric field");
    }
    using namespace std::chrono;
    year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                       day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || h > 23)
    {
        bad_timestamp(text, "date or hour out of range");
    }
    if (mi != 0 || s != 0)
    {
        bad_timestamp(text, "only whole hours are supported");
    }
    return sys_days{ymd} + hours{h};
}

std::string format_timestamp(Timestamp ts)
{
    using namespace std::chrono;
    auto const day_point = floor<days>(ts);
    year_month_day const ymd{day_point};
    hh_mm_ss const tod{ts - day_point};
    char buf[32];
    std::snprintf(
        buf,
        sizeof buf,
        "%04d-%02u-%02uT%02d:%02d:%02dZ",
        static_cast<int>(ymd.year()),
        static_cast<unsigned>(ymd.month()),
        static_cast<unsigned>(ymd.day()),
        static_cast<int>(tod.hours().count()),
        static_cast<int>(tod.minutes().count()),
        static_cast<int>(tod.seconds().count())
    );
    return buf;
}

} // namespace gridcarbon
