#pragma once

#include "brwdec/arith.hpp"
#include "brwdec/bitseq.hpp"
#include "brwdec/characteristic.hpp"
#include "brwdec/cnf.hpp"
#include "brwdec/engine.hpp"
#include "brwdec/minmax.hpp"
#include "brwdec/ordinal.hpp"
#include "brwdec/semidec.hpp"
#include "brwdec/sierpinski.hpp"
#include "brwdec/verdict.hpp"
