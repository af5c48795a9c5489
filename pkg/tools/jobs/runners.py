"""
Job Runners Module

One runner per command. A runner takes a JobSpec (command, decoded JSON
payload, default field, seed), calls the library and returns a JobResult
whose report echoes the canonical inputs so that it can be replayed.
"""

import logging
from dataclasses import dataclass

from tools.cohokill import kill_class, replay_certificate
from tools.field import parse_element, parse_field, parse_rational
from tools.groups import apply_phi, kernel_summary, make_group, membership, pair_points, verify_additivity
from tools.identities import Verdict, run_claim, selftest
from tools.imprim import AlgebraDescriptor, PureInsepExtension, adjunction_answers, degree, imp, imp_algebra, \
    min_generating_subset
from tools.pfd import PointedCurveMap, PoleSupport, group_pfd
from tools.ppoly import certify_wound_permawound, parse_ppolynomial
from tools.utils.error_utils import UsageError
from tools.utils.format_utils import serialize_value

logger = logging.getLogger(__name__)

SUCCESS, NEGATIVE, USAGE = 0, 1, 2


@dataclass
class JobSpec:
    """
    One job.

    Attributes:
        command (str): One of the job_factory COMMANDS
        payload (dict): Decoded JSON payload
        ctx (FieldContext): Field used when the payload names none
        seed (int): Seed for randomized checks
        samples (int): Default sample count for random modes
    """

    command: str
    payload: dict
    ctx: object
    seed: int = 0
    samples: int = None

    def to_json(self):
        return {'command': self.command, 'field': self.ctx.describe(), 'seed': self.seed, 'payload': self.payload}


@dataclass
class JobResult:
    """
    Attributes:
        command (str): Command that produced the report
        report (dict | list): JSON-ready output
        exit_code (int): 0 success, 1 domain negative, 2 usage error
    """

    command: str
    report: object
    exit_code: int = SUCCESS

    def to_json(self):
        return {'command': self.command, 'exit_code': self.exit_code, 'report': self.report}


def require(payload, key):
    if key not in payload:
        raise UsageError(f"payload needs {key!r}")
    return payload[key]


def payload_field(payload, ctx):
    """The payload's own {p, e, r} when given, else ``ctx``."""
    if 'p' in payload:
        return parse_field(payload)
    if 'field' in payload:
        return parse_field(payload['field'])
    return ctx


def _parse_values(ctx, values, over):
    parse = parse_rational if over == 'T' else parse_element
    if isinstance(values, dict):
        return {name: parse(ctx, text) for name, text in values.items()}
    if isinstance(values, list):
        return [parse(ctx, text) for text in values]
    raise UsageError("point coordinates must be a list or an object")


def _extension(ctx, generators):
    if not isinstance(generators, list):
        raise UsageError("generators must be a list of {a, n}")
    return PureInsepExtension.of(ctx, [(parse_element(ctx, g['a']), int(g.get('n', 1))) for g in generators])


def run_imp(job):
    """{generators: [{a, n}]} or {algebra: [[{a, n}], ...]} -> {imp, degree, min_generators}."""
    payload = job.payload
    ctx = payload_field(payload, job.ctx)
    if 'algebra' in payload:
        algebra = AlgebraDescriptor([_extension(ctx, factor) for factor in payload['algebra']])
        ext = algebra.compositum()
        value = imp_algebra(algebra)
    else:
        ext = _extension(ctx, require(payload, 'generators'))
        value = imp(ext)
    chosen = min_generating_subset(ext)
    report = {
        'field': ctx.describe(),
        'input': ext.to_json(),
        'imp': value,
        'degree': degree(ext),
        'min_generators': [ext.to_json()['generators'][i] for i in chosen],
        'adjunction_answers': adjunction_answers(ext),
    }
    return JobResult('imp', report)


def run_certify(job):
    """{form, variables?} -> WoundReport JSON."""
    payload = job.payload
    ctx = payload_field(payload, job.ctx)
    F = parse_ppolynomial(ctx, require(payload, 'form'), payload.get('variables'))
    if F.is_zero():
        raise UsageError("the zero form defines no hypersurface group")
    report = certify_wound_permawound(F, seed=job.seed).to_json()
    report.update({'field': ctx.describe(), 'input': F.to_expr(), 'variables': list(F.variables)})
    return JobResult('certify', report)


def run_group(job):
    """
    {action, preset, params, ...} for the actions make, membership,
    additivity, phi, kernel and pairing.
    """
    payload = job.payload
    ctx = payload_field(payload, job.ctx)
    action = payload.get('action', 'make')
    over = payload.get('over', 'K')
    if action == 'phi':
        n = int(require(payload, 'n'))
        point = apply_phi(n, ctx, _parse_values(ctx, require(payload, 'point'), over))
        return JobResult('group', {'action': action, 'n': n, 'image': point.to_json()})
    if action == 'kernel':
        return JobResult('group', dict(kernel_summary(ctx, int(require(payload, 'n'))), action=action))
    if action == 'pairing':
        n = int(require(payload, 'n'))
        points = [_parse_values(ctx, point, over) for point in require(payload, 'points')]
        if len(points) != ctx.r:
            raise UsageError(f"the pairing takes {ctx.r} points, one per lambda")
        image = pair_points(ctx, n, points)
        return JobResult('group', {'action': action, 'n': n, 'image': image.to_json()})

    G = make_group(require(payload, 'preset'), ctx, **payload.get('params', {}))
    report = {'action': action, 'group': G.to_json(), 'field': ctx.describe()}
    if action == 'make':
        return JobResult('group', report)
    if action == 'additivity':
        report['additive'] = verify_additivity(G)
        return JobResult('group', report, SUCCESS if report['additive'] else NEGATIVE)
    if action == 'membership':
        values = G.values_map(_parse_values(ctx, require(payload, 'point'), over))
        report['point'] = serialize_value(values)
        report['member'] = membership(G, values)
        return JobResult('group', report, SUCCESS if report['member'] else NEGATIVE)
    raise UsageError(f"unknown group action {action!r}",
                     hint="actions: make, membership, additivity, phi, kernel, pairing")


def run_pfd(job):
    """{preset, params, coordinates, support} -> one pointed map per pole."""
    payload = job.payload
    ctx = payload_field(payload, job.ctx)
    G = make_group(require(payload, 'preset'), ctx, **payload.get('params', {}))
    values = _parse_values(ctx, require(payload, 'coordinates'), 'T')
    support = PoleSupport.from_functions(ctx, [parse_rational(ctx, q) for q in require(payload, 'support')])
    f = PointedCurveMap(G, values)
    components = group_pfd(f, support)
    report = {
        'group': G.to_json(),
        'input': f.to_json(),
        'support': support.to_json(),
        'components': [component.to_json() for component in components],
    }
    return JobResult('pfd', report)


def run_kill(job):
    """{G, factors: [{n, mu}], target} -> replayable certificate."""
    payload = job.payload
    ctx = payload_field(payload, job.ctx)
    G = parse_rational(ctx, require(payload, 'G'))
    factors = [(int(item['n']), parse_element(ctx, item['mu'])) for item in payload.get('factors', [])]
    try:
        cert = kill_class(G, factors, payload.get('target', 'V'))
    except ValueError as ex:
        raise UsageError(str(ex), hint="targets: V, weil_alphap") from ex
    report = cert.to_json()
    report['factors'] = [{'n': n, 'mu': serialize_value(mu)} for n, mu in factors]
    return JobResult('kill', report)


def run_verify(job):
    """{certificate} or a bare certificate -> {verified}."""
    payload = job.payload
    data = payload.get('certificate', payload)
    try:
        cert, ok = replay_certificate(data)
    except (KeyError, ValueError) as ex:
        raise UsageError(f"not a certificate: {ex}", hint="pass the JSON written by the kill command") from ex
    report = {'verified': ok, 'certificate': cert.to_json()}
    return JobResult('verify', report, SUCCESS if ok else NEGATIVE)


def _claim_params(params, seed, samples):
    params = dict(params)
    if params.get('mode') == 'random':
        params.setdefault('seed', seed)
        if samples is not None:
            params.setdefault('samples', samples)
    return params


def run_verify_identities(job):
    """{claim, params} or {claims: [{claim, params}]} -> report or report list."""
    payload = job.payload
    if 'claims' in payload:
        items = payload['claims']
    else:
        items = [{'claim': require(payload, 'claim'), 'params': payload.get('params', {})}]
    reports = [run_claim(item['claim'], **_claim_params(item.get('params', {}), job.seed, job.samples))
               for item in items]
    refuted = any(report.verdict is Verdict.REFUTED for report in reports)
    data = [report.to_json() for report in reports]
    return JobResult('verify-identities', data if 'claims' in payload else data[0],
                     NEGATIVE if refuted else SUCCESS)


def run_selftest(job):
    """The p = 2 identity battery; exit 0 only when every claim is verified."""
    reports = selftest()
    ok = all(report.verified for report in reports)
    logger.info(f"selftest: {sum(r.verified for r in reports)} of {len(reports)} claims verified")
    return JobResult('selftest', [report.to_json() for report in reports], SUCCESS if ok else NEGATIVE)
