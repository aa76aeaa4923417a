"""Semantic templates and composition."""

from .compose import LEX_RULE, POSITIVE, close, compose, interpret, lift_event_quantifiers, negate, resolve_many_thresholds
from .templates import (
    DEGREE_MODIFIER,
    GQ,
    GRADABLE,
    SENT,
    NoTemplate,
    Scale,
    Template,
    TemplateBank,
    TemplateError,
    category_to_type,
    instantiate,
    lookup_template,
    predicate_name,
    semantic_type,
)
