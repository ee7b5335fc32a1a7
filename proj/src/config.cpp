#include "grasscode/config.hpp"

namespace grasscode {

Caps& caps() {
    static Caps c;
    return c;
}

}  // namespace grasscode
