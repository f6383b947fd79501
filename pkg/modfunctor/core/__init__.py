import pkg_resources


try:
    version = pkg_resources.get_distribution("modfunctor").version
except pkg_resources.DistributionNotFound:
    # running from a source checkout that was never installed
    version = "0.0.0+source"
is_release_tag = None
if "+" not in str(version):
    is_release_tag = f"Release: {version}"
