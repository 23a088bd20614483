#pragma once

#include "permdex/codec.hpp"
#include "permdex/error.hpp"
#include "permdex/layout.hpp"
#include "permdex/matrix.hpp"
#include "permdex/matrix_io.hpp"
#include "permdex/passkey.hpp"
#include "permdex/perm_rank.hpp"
#include "permdex/stats.hpp"
