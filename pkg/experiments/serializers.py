"""
Serializers for experiment configuration, records and reports.
"""
import math
from pathlib import Path

from django.conf import settings
from rest_framework import serializers

from arith_core.primes import is_squarefree
from cubicspin.exceptions import ConfigError

from .config import MODES, ScanConfig


class ScanConfigSerializer(serializers.Serializer):
    """Serializer for scan options; save() builds the ScanConfig."""
    d = serializers.IntegerField(min_value=1)
    f = serializers.IntegerField(min_value=1, default=1)
    x_max = serializers.IntegerField(min_value=2)
    filters = serializers.ListField(child=serializers.CharField(), default=list)
    m = serializers.IntegerField(min_value=2, default=3)
    mode = serializers.ChoiceField(choices=MODES, default='both')
    checkpoints = serializers.ListField(child=serializers.IntegerField(min_value=2), default=list)
    seed = serializers.IntegerField(default=lambda: settings.VERIFY_DEFAULT_SEED)
    cache = serializers.CharField(required=False, allow_null=True, default=None)
    workers = serializers.IntegerField(min_value=1, default=lambda: settings.SCAN_WORKERS)
    block_size = serializers.IntegerField(min_value=1, default=lambda: settings.SCAN_BLOCK_SIZE)

    def validate_d(self, value):
        if value == 3 or not is_squarefree(value):
            raise serializers.ValidationError("d must be squarefree and not 3")
        return value

    def validate_filters(self, value):
        parsed = []
        for item in value:
            try:
                modulus, residue = (int(part) for part in item.split(':'))
            except ValueError:
                raise serializers.ValidationError(f"filter {item!r} is not MOD:RES")
            if modulus < 2:
                raise serializers.ValidationError(f"filter modulus {modulus} < 2")
            parsed.append((modulus, residue % modulus))
        return parsed

    def validate(self, attrs):
        checkpoints = attrs.get('checkpoints', [])
        if checkpoints != sorted(set(checkpoints)):
            raise serializers.ValidationError({'checkpoints': "must be strictly ascending"})
        if checkpoints and checkpoints[-1] > attrs['x_max']:
            raise serializers.ValidationError({'checkpoints': "must not exceed x_max"})
        return attrs

    def create(self, validated_data):
        return ScanConfig(
            d=validated_data['d'],
            f=validated_data['f'],
            x_max=validated_data['x_max'],
            residue_filters=tuple(validated_data['filters']),
            m=validated_data['m'],
            mode=validated_data['mode'],
            checkpoints=tuple(validated_data['checkpoints']),
            seed=validated_data['seed'],
            cache_path=_cache_path(validated_data.get('cache')),
            workers=validated_data['workers'],
            block_size=validated_data['block_size'],
            segment_size=settings.SIEVE_SEGMENT_SIZE,
            exhaustive_limit=settings.POINT_COUNT_EXHAUSTIVE_LIMIT,
            sample_modulus=settings.POINT_COUNT_SAMPLE_MODULUS,
            point_count_limit=settings.POINT_COUNT_LIMIT,
        )


def _cache_path(cache):
    """Bare file names live in CACHE_DIR."""
    if not cache:
        return None
    path = Path(cache)
    if path.parent == Path('.'):
        return settings.CACHE_DIR / path
    return path


def build_scan_config(data: dict) -> ScanConfig:
    """Validate raw options into a ScanConfig, ValidationError becoming ConfigError."""
    serializer = ScanConfigSerializer(data=data)
    if not serializer.is_valid():
        raise ConfigError(f"invalid configuration: {dict(serializer.errors)}")
    return serializer.save().validate()


class SpinRecordSerializer(serializers.Serializer):
    """Serializer for exported scan records, fields in column order."""
    p = serializers.IntegerField()
    d = serializers.IntegerField()
    f = serializers.IntegerField()
    a = serializers.IntegerField()
    b = serializers.IntegerField()
    ap = serializers.IntegerField(allow_null=True)
    cube = serializers.BooleanField()
    spin_k = serializers.IntegerField(allow_null=True)


class DensityRowSerializer(serializers.Serializer):
    x = serializers.IntegerField()
    q = serializers.IntegerField()
    c = serializers.IntegerField()
    fraction = serializers.FloatField()


class DensityReportSerializer(serializers.Serializer):
    """Serializer for density reports."""
    m = serializers.IntegerField()
    q_total = serializers.IntegerField()
    c_total = serializers.IntegerField()
    fraction = serializers.FloatField()
    rows = DensityRowSerializer(many=True)
    config = serializers.DictField()


class SpinSumRowSerializer(serializers.Serializer):
    x = serializers.IntegerField()
    q = serializers.IntegerField()
    c = serializers.IntegerField()
    n0 = serializers.IntegerField()
    n1 = serializers.IntegerField()
    n2 = serializers.IntegerField()
    A = serializers.IntegerField()
    B = serializers.IntegerField()
    norm = serializers.IntegerField()
    exponent = serializers.SerializerMethodField()

    def get_exponent(self, obj):
        """log|S(X)| / log X, or None when S(X) = 0."""
        if obj.norm == 0:
            return None
        return round(math.log(obj.norm) / (2 * math.log(obj.x)), 6)


class SpinSumReportSerializer(serializers.Serializer):
    """Serializer for spin-sum reports."""
    full_orbit = serializers.BooleanField()
    rows = SpinSumRowSerializer(many=True)
    config = serializers.DictField()


class VerifyReportSerializer(serializers.Serializer):
    """Serializer for verification suite reports."""
    suite = serializers.CharField()
    seed = serializers.IntegerField()
    checked = serializers.IntegerField()
    failures = serializers.IntegerField()
    params = serializers.DictField()
