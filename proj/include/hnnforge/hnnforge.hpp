#pragma once

// Umbrella header.

#include "hnnforge/bs12.hpp"
#include "hnnforge/certify.hpp"
#include "hnnforge/config.hpp"
#include "hnnforge/dyadic.hpp"
#include "hnnforge/errors.hpp"
#include "hnnforge/gword.hpp"
#include "hnnforge/perm.hpp"
#include "hnnforge/quotient.hpp"
#include "hnnforge/relator.hpp"
#include "hnnforge/report.hpp"
#include "hnnforge/small_cancellation.hpp"
#include "hnnforge/word_text.hpp"
