# -*- coding: UTF-8 -*-
from __future__ import absolute_import, division, print_function
from builtins import *  # @UnusedWildImport

from sumfree_lab.enums import ErrorCode

_ERR_MESSAGES = {
    ErrorCode.NOERRORS: "No error occurred",
    ErrorCode.BADFACTOR: "Cyclic factors must be integers greater than or "
                         "equal to 2",
    ErrorCode.BADGROUPSPEC: "Invalid group spec; expected comma-separated "
                            "cyclic factors such as 12 or 2,6",
    ErrorCode.RANKMISMATCH: "Element rank does not match the group rank",
    ErrorCode.GROUPMISMATCH: "Operands belong to different groups",
    ErrorCode.BADELEMENT: "Element coordinate or rank index out of range",
    ErrorCode.TRIVIALGROUP: "Not defined for the trivial group",
    ErrorCode.TRIVIALCHARACTER: "A nontrivial character is required",
    ErrorCode.BADSUBSETSPEC: "Invalid subset spec; expected rank indices "
                             "such as 1,2,3 or a hex mask such as 0xE",
    ErrorCode.LIMITEXCEEDED: "Group order exceeds the enumeration limit",
    ErrorCode.BADMODULUS: "Character order must be congruent to 1 mod 6",
    ErrorCode.BADPARAMETER: "Parameter out of range",
    ErrorCode.DEGENERATEDENSITY: "Subset must be nonempty and proper",
    ErrorCode.INFEASIBLE: "Extremal problem is infeasible: cap * q < mass",
    ErrorCode.INCONSISTENT: "Internal consistency check failed",
    ErrorCode.FILEERROR: "File could not be read or written",
    ErrorCode.BADCONFIG: "Invalid configuration value",
    ErrorCode.BADCHECKNAME: "Unknown check name",
    ErrorCode.BADBACKEND: "Unknown transform backend",
}


class LabError(Exception):
    def __init__(self, errorcode, detail=None):
        super(LabError, self).__init__()
        self.errorcode = errorcode
        self.message = get_err_msg(errorcode)
        self.detail = detail

    def __str__(self):
        text = "Error " + str(int(self.errorcode)) + ": " + self.message
        if self.detail:
            text += " (" + str(self.detail) + ")"
        return text


def get_err_msg(error_code):
    """Returns the error message associated with an error code. It is usually
    unnecessary to call this externally, since LabError errors assign the
    value to their message property.

    Parameters
    ----------
    error_code : ErrorCode
        The error code carried by a LabError.

    Returns
    -------
    string
        The error message associated with the given error_code
    """
    try:
        return _ERR_MESSAGES[ErrorCode(error_code)]
    except ValueError:
        return "Unknown error code " + str(error_code)


def check_arg(condition, errorcode, detail=None):
    if not condition:
        raise LabError(errorcode, detail)
