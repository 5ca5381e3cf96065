#include "mbfix/bigcount.hpp"

#include <cctype>
#include <stdexcept>

namespace mbfix {

BigCount parse_decimal(const std::string& text) {
    BigCount value = 0;
    bool any = false;
    for (char ch : text) {
        if (ch == ' ' || ch == ',' || ch == '_') continue;
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument("not a decimal count: '" + text + "'");
        }
        value = value * 10 + (ch - '0');
        any = true;
    }
    if (!any) throw std::invalid_argument("empty decimal count");
    return value;
}

BigCount factorial(unsigned n) {
    BigCount r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

}  // namespace mbfix
