// trs.hpp — convenience umbrella header.

#pragma once

#include "trs/cascade.hpp"
#include "trs/channel.hpp"
#include "trs/construction.hpp"
#include "trs/gf.hpp"
#include "trs/hexio.hpp"
#include "trs/oracle.hpp"
#include "trs/poly.hpp"
#include "trs/rs.hpp"
#include "trs/simulate.hpp"
#include "trs/words.hpp"
