#pragma once

#include "calex/bigint.hpp"
#include "calex/cgroup.hpp"
#include "calex/covering.hpp"
#include "calex/error.hpp"
#include "calex/laurent.hpp"
#include "calex/lmodule.hpp"
#include "calex/polymatrix.hpp"
#include "calex/word.hpp"
#include "calex/zmodule.hpp"
