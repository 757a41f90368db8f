from django.http import JsonResponse

from .closed_forms import betti_table_closed, depth, homology_E_runs, pd_reg
from .errors import BettiLabError, InvalidParameters
from .exchange import homology_payload
from .hochster_oracle import OracleConfig, betti_table_facet
from .homology import FieldSpec, reduced_homology_dims
from .path_ideals import build_cycle_complex, build_E_complex, facet_ideal, make_params


def _int_param(request, name, default=None) -> int:
    raw = request.GET.get(name)
    if raw is None or raw == '':
        if default is None:
            raise InvalidParameters(f"query parameter {name!r} is required")
        return default
    try:
        return int(raw)
    except ValueError:
        raise InvalidParameters(f"query parameter {name!r} must be an integer, got {raw!r}")


def _params(request):
    return make_params(_int_param(request, 'n'), _int_param(request, 'm'), _int_param(request, 'l'))


def _field(request) -> FieldSpec:
    raw = request.GET.get('field')
    if raw is None or raw == '':
        return OracleConfig.from_settings().field
    return FieldSpec.parse(raw)


def _error(exc: BettiLabError) -> JsonResponse:
    return JsonResponse({'error': str(exc)}, status=exc.http_status)


def _get_only(request):
    if request.method != 'GET':
        return JsonResponse({'error': 'GET method required'}, status=405)
    return None


def params_view(request):
    rejected = _get_only(request)
    if rejected:
        return rejected
    try:
        params = _params(request)
        ideal = facet_ideal(build_cycle_complex(params))
    except BettiLabError as exc:
        return _error(exc)
    return JsonResponse({'params': params.as_dict(), 'ideal': str(ideal), 'degrees': ideal.degrees()})


def betti_view(request):
    rejected = _get_only(request)
    if rejected:
        return rejected
    mode = request.GET.get('mode', 'closed')
    if mode not in ('closed', 'oracle', 'both'):
        return JsonResponse({'error': f"unknown mode {mode!r}"}, status=400)
    try:
        params = _params(request)
        cfg = OracleConfig.from_settings(field=_field(request))
        payload = {'params': params.as_dict(), 'mode': mode}
        if mode in ('closed', 'both'):
            closed = betti_table_closed(params, cfg.facet_subset_budget)
            payload['closed'] = closed.records()
            payload['scope'] = sorted(closed.scope) if closed.scope is not None else None
        if mode in ('oracle', 'both'):
            oracle = betti_table_facet(build_cycle_complex(params), cfg)
            payload['oracle'] = oracle.records()
            payload['field'] = cfg.field.code
        if mode == 'both':
            payload['differences'] = closed.differences(oracle)
            payload['match'] = not payload['differences']
    except BettiLabError as exc:
        return _error(exc)
    return JsonResponse(payload)


def pdreg_view(request):
    rejected = _get_only(request)
    if rejected:
        return rejected
    mode = request.GET.get('mode', 'closed')
    if mode not in ('closed', 'oracle', 'both'):
        return JsonResponse({'error': f"unknown mode {mode!r}"}, status=400)
    try:
        params = _params(request)
        payload = {'params': params.as_dict(), 'mode': mode}
        if mode in ('closed', 'both'):
            pd, reg = pd_reg(params)
            payload['closed'] = {'pd': pd, 'reg': reg, 'depth': depth(params)}
        if mode in ('oracle', 'both'):
            cfg = OracleConfig.from_settings(field=_field(request))
            table = betti_table_facet(build_cycle_complex(params), cfg)
            payload['oracle'] = {'pd': table.pd, 'reg': table.reg, 'depth': params.n - table.pd}
        if mode == 'both':
            payload['match'] = payload['closed'] == payload['oracle']
    except BettiLabError as exc:
        return _error(exc)
    return JsonResponse(payload)


def homology_view(request):
    rejected = _get_only(request)
    if rejected:
        return rejected
    try:
        raw_runs = request.GET.get('runs', '')
        try:
            runs = [int(token) for token in raw_runs.split(',') if token.strip()]
        except ValueError:
            raise InvalidParameters(f"runs must be comma-separated integers, got {raw_runs!r}")
        if not runs:
            raise InvalidParameters("query parameter 'runs' is required")
        m, l = _int_param(request, 'm'), _int_param(request, 'l')
        field_spec = _field(request)
        cfg = OracleConfig.from_settings(field=field_spec)
        delta = build_E_complex(runs, m, l)
        dims = reduced_homology_dims(delta, field_spec, cfg.face_budget, cfg.method)
        expected = homology_E_runs(runs, (m - m % l) // l)
    except BettiLabError as exc:
        return _error(exc)
    payload = homology_payload(dims)
    payload.update({'runs': runs, 'm': m, 'l': l, 'field': field_spec.code,
                    'closed': expected.as_dict(), 'match': expected.matches(dims)})
    return JsonResponse(payload)


def runs_view(request):
    rejected = _get_only(request)
    if rejected:
        return rejected
    from reports.models import VerificationRun

    raw_limit = request.GET.get('limit', '20')
    limit = min(int(raw_limit), 200) if raw_limit.isdigit() and int(raw_limit) > 0 else 20
    runs = VerificationRun.objects.order_by('-created_at')[:limit]
    return JsonResponse({'runs': [run.as_dict() for run in runs]})
