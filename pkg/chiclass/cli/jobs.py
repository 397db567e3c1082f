"""
Job files: a JSON object naming a command and its payload.  The loader
validates every field against the grammar documented in
docs/source/job_schema.json before anything is computed, and turns the
payload into the library's input types.

Rationals are written as strings "p/q" (or plain integers); polynomials
in y as strings such as "1 - 7y + y^2".  Floating point numbers are
rejected everywhere.
"""

import json
import logging

from chiclass.algebra import parse_ypoly, ypoly
from chiclass.cli import config
from chiclass.geometry import CompleteIntersection, projective_ring
from chiclass.nearby import LogPair, SncResolution, SncStratum, StratumGenus
from chiclass.oracles import (BlowupPoint, Complement, ContractCurve, DisjointUnion,
                              Piece, Product)
from chiclass.singularity import IsolatedSingularPoint, SpectrumData, Weights, as_rational

logger = logging.getLogger(__name__)

COMMANDS = ("classes", "virtual", "chi-y", "milnor", "spectrum", "nearby", "verify")
CHECKS = ("prop14", "series", "specializations", "ghrr", "cor2")


class JobSpecError(ValueError):
    """ an invalid job file; field is the dotted path of the offending entry """

    def __init__(self, field, message):
        self.field = field
        super(JobSpecError, self).__init__("{}: {}".format(field, message))


class JobSpec(object):
    """ a validated job: the command, its raw payload and the parsed inputs """

    def __init__(self, command, payload, output_format="table", order=config.DEFAULT_ORDER):
        self.command = command
        self.payload = payload
        self.output_format = output_format
        self.order = order
        self.inputs = {}

    def __repr__(self):
        return "JobSpec({!r}, format={})".format(self.command, self.output_format)


def _is_int(v):
    return isinstance(v, int) and not isinstance(v, bool)


def _require(d, key, path):
    if not isinstance(d, dict):
        raise JobSpecError(path, "expected an object")
    if key not in d:
        raise JobSpecError("{}.{}".format(path, key), "missing required field")
    return d[key]


def _check_keys(d, allowed, path):
    if not isinstance(d, dict):
        raise JobSpecError(path, "expected an object")
    for key in d:
        if key not in allowed:
            raise JobSpecError("{}.{}".format(path, key), "unknown field")


def parse_int(v, path, minimum=None):
    if not _is_int(v):
        raise JobSpecError(path, "expected an integer, got {!r}".format(v))
    if minimum is not None and v < minimum:
        raise JobSpecError(path, "must be at least {}, got {}".format(minimum, v))
    return v


def parse_rational(v, path):
    if isinstance(v, float):
        raise JobSpecError(path, "floating point value {!r}; write rationals as \"p/q\"".format(v))
    if not (_is_int(v) or isinstance(v, str)):
        raise JobSpecError(path, "expected a rational \"p/q\", got {!r}".format(v))
    try:
        return as_rational(v)
    except (TypeError, ValueError) as err:
        raise JobSpecError(path, str(err))


def parse_polynomial(v, path):
    if _is_int(v):
        return ypoly(v)
    if not isinstance(v, str):
        raise JobSpecError(path, "expected a polynomial in y written as a string, got {!r}".format(v))
    try:
        return parse_ypoly(v)
    except ValueError as err:
        raise JobSpecError(path, str(err))


def parse_list(v, path, nonempty=False):
    if not isinstance(v, list):
        raise JobSpecError(path, "expected a list, got {!r}".format(v))
    if nonempty and not v:
        raise JobSpecError(path, "must not be empty")
    return v


def parse_ambient(v, path):
    if _is_int(v):
        factors = [v]
    else:
        factors = parse_list(v, path, nonempty=True)
    for i, n in enumerate(factors):
        parse_int(n, "{}[{}]".format(path, i) if not _is_int(v) else path, minimum=1)
    ring = projective_ring(factors)
    limit = config.max_dim()
    if ring.dim > limit:
        raise JobSpecError(path, "ambient dimension {} exceeds {} = {}".format(
            ring.dim, config.MAX_DIM_VARIABLE, limit))
    return ring


def parse_multidegrees(v, ring, path, minimum=1):
    degrees = []
    for j, a in enumerate(parse_list(v, path)):
        p = "{}[{}]".format(path, j)
        if _is_int(a):
            a = [a]
        for i, d in enumerate(parse_list(a, p, nonempty=True)):
            parse_int(d, "{}[{}]".format(p, i), minimum=minimum)
        if len(a) != ring.nfactors:
            raise JobSpecError(p, "needs one entry per factor of {}".format(ring))
        if not any(a):
            raise JobSpecError(p, "is the zero multidegree")
        degrees.append(tuple(a))
    return degrees


def parse_complete_intersection(payload, path):
    ring = parse_ambient(_require(payload, "ambient", path), path + ".ambient")
    degrees = parse_multidegrees(payload.get("degrees", []), ring, path + ".degrees")
    try:
        return CompleteIntersection(ring, degrees)
    except ValueError as err:
        raise JobSpecError(path + ".degrees", str(err))


def parse_singularities(v, path):
    points = []
    for i, entry in enumerate(parse_list(v, path)):
        p = "{}[{}]".format(path, i)
        _check_keys(entry, ("label", "weights", "spectrum", "n"), p)
        label = entry.get("label", "x{}".format(i+1))
        if ("weights" in entry) == ("spectrum" in entry):
            raise JobSpecError(p, "give exactly one of weights and spectrum")
        try:
            if "weights" in entry:
                w = [parse_rational(x, "{}.weights[{}]".format(p, k))
                     for k, x in enumerate(parse_list(entry["weights"], p + ".weights", nonempty=True))]
                points.append(IsolatedSingularPoint(label, weights=Weights(w)))
            else:
                n = parse_int(_require(entry, "n", p), p + ".n", minimum=1)
                s = [parse_rational(x, "{}.spectrum[{}]".format(p, k))
                     for k, x in enumerate(parse_list(entry["spectrum"], p + ".spectrum"))]
                points.append(IsolatedSingularPoint(label, spectrum=SpectrumData(s, n)))
        except JobSpecError:
            raise
        except ValueError as err:
            raise JobSpecError(p, str(err))
    return points


_SCISSOR_KEYS = ("piece", "dim", "union", "complement", "product", "blowup", "points",
                 "contract", "curves", "ref")


def parse_scissor(v, path, definitions=None, _active=()):
    """ build a ScissorExpr; {"ref": name} refers to an entry of definitions """
    _check_keys(v, _SCISSOR_KEYS, path)
    definitions = definitions or {}
    try:
        if "ref" in v:
            name = v["ref"]
            if name not in definitions:
                raise JobSpecError(path + ".ref", "undefined expression {!r}".format(name))
            if name in _active:
                raise JobSpecError(path + ".ref", "circular definition of {!r}".format(name))
            return parse_scissor(definitions[name], "payload.definitions.{}".format(name),
                                 definitions, _active + (name,))
        if "piece" in v:
            kind = v["piece"]
            dim = parse_int(v.get("dim", 0), path + ".dim", minimum=0)
            return Piece(kind, dim)
        if "union" in v:
            parts = parse_list(v["union"], path + ".union", nonempty=True)
            return DisjointUnion(*[parse_scissor(e, "{}.union[{}]".format(path, i), definitions, _active)
                                   for i, e in enumerate(parts)])
        if "complement" in v:
            pair = parse_list(v["complement"], path + ".complement")
            if len(pair) != 2:
                raise JobSpecError(path + ".complement", "expected [whole, closed part]")
            return Complement(parse_scissor(pair[0], path + ".complement[0]", definitions, _active),
                              parse_scissor(pair[1], path + ".complement[1]", definitions, _active))
        if "product" in v:
            factors = parse_list(v["product"], path + ".product", nonempty=True)
            return Product(*[parse_scissor(e, "{}.product[{}]".format(path, i), definitions, _active)
                             for i, e in enumerate(factors)])
        if "blowup" in v:
            points = parse_int(v.get("points", 1), path + ".points", minimum=0)
            return BlowupPoint(parse_scissor(v["blowup"], path + ".blowup", definitions, _active), points)
        if "contract" in v:
            curves = parse_int(v.get("curves", 1), path + ".curves", minimum=0)
            return ContractCurve(parse_scissor(v["contract"], path + ".contract", definitions, _active),
                                 curves)
    except JobSpecError:
        raise
    except ValueError as err:
        raise JobSpecError(path, str(err))
    raise JobSpecError(path, "expected one of piece, union, complement, product, blowup, contract, ref")


def parse_table(v, path):
    table = []
    for i, entry in enumerate(parse_list(v, path, nonempty=True)):
        p = "{}[{}]".format(path, i)
        entry = parse_list(entry, p)
        if len(entry) != 2:
            raise JobSpecError(p, "expected [|J|, chi_y]")
        table.append((parse_int(entry[0], p + "[0]", minimum=0), parse_polynomial(entry[1], p + "[1]")))
    return table


def parse_snc(payload, path):
    comps = []
    for i, c in enumerate(parse_list(_require(payload, "components", path), path + ".components",
                                     nonempty=True)):
        p = "{}.components[{}]".format(path, i)
        _check_keys(c, ("id", "m"), p)
        comps.append((_require(c, "id", p), parse_int(_require(c, "m", p), p + ".m", minimum=1)))

    strata = []
    for i, s in enumerate(parse_list(_require(payload, "strata", path), path + ".strata")):
        p = "{}.strata[{}]".format(path, i)
        _check_keys(s, ("components", "table", "over_sigma", "base"), p)
        members = parse_list(_require(s, "components", p), p + ".components", nonempty=True)
        over = s.get("over_sigma", False)
        if not isinstance(over, bool):
            raise JobSpecError(p + ".over_sigma", "expected true or false")
        base = parse_polynomial(s["base"], p + ".base") if "base" in s else None
        table = parse_table(_require(s, "table", p), p + ".table")
        strata.append(SncStratum(members, table, over_sigma=over, base_chi_y=base))

    sigma = parse_polynomial(payload["sigma"], path + ".sigma") if "sigma" in payload else None
    sigma_x = (parse_polynomial(payload["sigma_x_prime"], path + ".sigma_x_prime")
               if "sigma_x_prime" in payload else None)
    try:
        return SncResolution(comps, strata, sigma, sigma_x)
    except ValueError as err:
        raise JobSpecError(path, str(err))


def parse_log_pair(v, path):
    _check_keys(v, ("ambient", "divisors"), path)
    ring = parse_ambient(_require(v, "ambient", path), path + ".ambient")
    divisors = parse_multidegrees(v.get("divisors", []), ring, path + ".divisors", minimum=0)
    return LogPair(ring, divisors)


def parse_strata(v, path):
    out = []
    for i, s in enumerate(parse_list(v, path, nonempty=True)):
        p = "{}[{}]".format(path, i)
        _check_keys(s, ("label", "chi_c", "local"), p)
        out.append(StratumGenus(s.get("label", "S{}".format(i+1)),
                                parse_polynomial(_require(s, "chi_c", p), p + ".chi_c"),
                                parse_polynomial(s.get("local", 1), p + ".local")))
    return out


_PAYLOAD_KEYS = {
    "classes": ("ambient", "degrees"),
    "virtual": ("ambient", "degrees"),
    "chi-y": ("ambient", "degrees", "scissor", "definitions"),
    "milnor": ("ambient", "degrees", "singularities", "chi_y", "euler", "scissor",
               "definitions", "levels"),
    "spectrum": ("weights", "spectrum", "n"),
    "nearby": ("components", "strata", "sigma", "sigma_x_prime", "log_pair", "stratification"),
    "verify": ("check", "nMax", "dMax", "order"),
}


def _parse_payload(job):
    cmd = job.command
    payload = job.payload
    path = "payload"
    _check_keys(payload, _PAYLOAD_KEYS[cmd], path)
    inputs = job.inputs

    if cmd in ("classes", "virtual"):
        inputs["ci"] = parse_complete_intersection(payload, path)

    elif cmd == "chi-y":
        if "scissor" in payload:
            inputs["scissor"] = parse_scissor(payload["scissor"], path + ".scissor",
                                              payload.get("definitions", {}))
        if "ambient" in payload:
            inputs["ci"] = parse_complete_intersection(payload, path)
        if not inputs:
            raise JobSpecError(path, "needs ambient/degrees or scissor")

    elif cmd == "milnor":
        if "levels" in payload:
            inputs["levels"] = [parse_polynomial(x, "{}.levels[{}]".format(path, i))
                                for i, x in enumerate(parse_list(payload["levels"], path + ".levels"))]
        if "ambient" in payload:
            inputs["ci"] = parse_complete_intersection(payload, path)
            inputs["singularities"] = parse_singularities(payload.get("singularities", []),
                                                          path + ".singularities")
            if "chi_y" in payload:
                inputs["chi_y"] = parse_polynomial(payload["chi_y"], path + ".chi_y")
            if "scissor" in payload:
                inputs["scissor"] = parse_scissor(payload["scissor"], path + ".scissor",
                                                  payload.get("definitions", {}))
            if "euler" in payload:
                inputs["euler"] = parse_int(payload["euler"], path + ".euler")
        elif "levels" not in payload:
            raise JobSpecError(path, "needs ambient/degrees/singularities or levels")

    elif cmd == "spectrum":
        if ("weights" in payload) == ("spectrum" in payload):
            raise JobSpecError(path, "give exactly one of weights and spectrum")
        if "weights" in payload:
            w = [parse_rational(x, "{}.weights[{}]".format(path, i))
                 for i, x in enumerate(parse_list(payload["weights"], path + ".weights", nonempty=True))]
            try:
                inputs["weights"] = Weights(w)
            except ValueError as err:
                raise JobSpecError(path + ".weights", str(err))
        else:
            n = parse_int(_require(payload, "n", path), path + ".n", minimum=1)
            s = [parse_rational(x, "{}.spectrum[{}]".format(path, i))
                 for i, x in enumerate(parse_list(payload["spectrum"], path + ".spectrum"))]
            try:
                inputs["spectrum"] = SpectrumData(s, n)
            except ValueError as err:
                raise JobSpecError(path + ".spectrum", str(err))

    elif cmd == "nearby":
        if "components" in payload:
            inputs["snc"] = parse_snc(payload, path)
        if "log_pair" in payload:
            inputs["log_pair"] = parse_log_pair(payload["log_pair"], path + ".log_pair")
        if "stratification" in payload:
            inputs["stratification"] = parse_strata(payload["stratification"], path + ".stratification")
        if not inputs:
            raise JobSpecError(path, "needs components/strata, log_pair or stratification")

    elif cmd == "verify":
        check = _require(payload, "check", path)
        if check not in CHECKS:
            raise JobSpecError(path + ".check", "unknown check {!r}, expected one of {}".format(
                check, ", ".join(CHECKS)))
        inputs["check"] = check
        inputs["nMax"] = parse_int(payload.get("nMax", 4), path + ".nMax", minimum=1)
        inputs["dMax"] = parse_int(payload.get("dMax", 3), path + ".dMax", minimum=1)
        if inputs["nMax"] > config.max_dim():
            raise JobSpecError(path + ".nMax", "exceeds {} = {}".format(
                config.MAX_DIM_VARIABLE, config.max_dim()))
        if "order" in payload:
            job.order = parse_int(payload["order"], path + ".order", minimum=1)


def job_from_dict(data, command=None, output_format=None, order=None):
    """
    validate a decoded job file.  command, output_format and order given
    on the command line take precedence over the file; a command in the
    file must agree with the one on the command line.
    """
    if not isinstance(data, dict):
        raise JobSpecError("job", "expected a JSON object")

    file_command = data.get("command")
    if command is None:
        command = file_command
    elif file_command is not None and file_command != command:
        raise JobSpecError("command", "file says {!r} but {!r} was requested".format(
            file_command, command))
    if command not in COMMANDS:
        raise JobSpecError("command", "unknown command {!r}, expected one of {}".format(
            command, ", ".join(COMMANDS)))

    fmt = output_format or data.get("format", "table")
    if fmt not in config.FORMATS:
        raise JobSpecError("format", "expected one of {}, got {!r}".format(
            ", ".join(config.FORMATS), fmt))

    if "payload" in data:
        payload = data["payload"]
        _check_keys(data, ("command", "format", "payload"), "job")
    else:
        payload = {k: v for k, v in data.items() if k not in ("command", "format")}

    job = JobSpec(command, payload, fmt)
    _parse_payload(job)
    if order is not None:
        job.order = parse_int(order, "order", minimum=1)
    logger.debug("loaded %r", job)
    return job


def load_job(filename, command=None, output_format=None, order=None):
    """ read and validate a JSON job file """
    try:
        with open(filename, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as err:
        raise JobSpecError("input", "cannot read {}: {}".format(filename, err.strerror))
    except ValueError as err:
        raise JobSpecError("input", "{} is not valid JSON: {}".format(filename, err))
    return job_from_dict(data, command, output_format, order)
