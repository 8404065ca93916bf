#pragma once

#include <wrd/scalar.hpp>
#include <wrd/extended.hpp>
#include <wrd/set_literal.hpp>
#include <wrd/basis.hpp>
#include <wrd/constant.hpp>
#include <wrd/interval.hpp>
#include <wrd/congruence.hpp>
#include <wrd/product.hpp>
#include <wrd/syntax.hpp>
#include <wrd/nonrel.hpp>
#include <wrd/matrix.hpp>
#include <wrd/program.hpp>
#include <wrd/cfg.hpp>
#include <wrd/domains.hpp>
#include <wrd/engine.hpp>
#include <wrd/driver.hpp>
