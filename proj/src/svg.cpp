#include "milnor/common.hpp"
