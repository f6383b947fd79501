from click import (
    argument,
    Choice,
    command,
    Context,
    echo,
    File,
    Group,
    group,
    IntRange,
    Option,
    ParamType,
    pass_context,
    Path,
)
from click import option as _click_option


PROGRAM = "modfunctor"


class RequiredParentOption(Option):
    """
    For any required option in a parent group, use this type so that --help works
    for the parent command as well as the sub-command.
    """

    def handle_parse_result(self, ctx, opts, args, depth=0):
        # this is only a group if it has a "commands" field
        if hasattr(ctx.command, "commands"):
            if any(arg in ctx.help_option_names for arg in args):
                # descend to the deepest sub command named on the command line
                for arg in args:
                    if arg in ctx.command.commands:
                        cmd = ctx.command.commands[arg]
                        with Context(cmd) as sub_ctx:
                            if not self.handle_parse_result(sub_ctx, opts, args, depth + 1):
                                help = cmd.get_help(sub_ctx)
                                parent = ctx.command.name
                                if cmd.name == PROGRAM:
                                    fix = "Usage: "
                                elif parent == PROGRAM:
                                    fix = f"Usage: {parent} {cmd.name}"
                                else:
                                    fix = f"Usage: {PROGRAM} {parent} {cmd.name}"
                                echo(help.replace("Usage: ", fix))
                                sub_ctx.exit()
        if depth == 0:
            return super(RequiredParentOption, self).handle_parse_result(
                ctx, opts, args)


def option(*args, **kwargs):
    kwargs["cls"] = RequiredParentOption
    return _click_option(*args, **kwargs)


class LabelList(ParamType):
    """Comma separated list of labels, e.g. ``--boundary 0,tau``. The empty string is the empty
    list."""

    name = "labels"

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            return list(value)
        return [part.strip() for part in value.split(",") if part.strip()]


class PositiveFloat(ParamType):
    name = "positive float"

    def convert(self, value, param, ctx):
        try:
            result = float(value)
        except (TypeError, ValueError):
            self.fail(f"{value!r} is not a number", param, ctx)
        if result <= 0:
            self.fail(f"{value!r} must be positive", param, ctx)
        return result
